//! Hodge numbers and Euler characteristic of nodal quartic threefolds,
//! divisor arithmetic on Hirzebruch surfaces, and rationality verdicts.

use std::fmt;

use crate::error::{Error, Result};
use crate::families::MAX_QUARTIC_NODES;

/// Cubic forms on `P^4`.
const CUBICS: i64 = 35;
/// Correction term for quartics in `P^4`.
const QUARTIC_CORRECTION: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantsReport {
    pub nodes: usize,
    pub defect: usize,
    pub h11: i64,
    pub h21: i64,
    pub chi: i64,
}

/// Hodge numbers of a small resolution of a nodal quartic threefold with
/// `nodes` nodes and the given defect.
pub fn cynk_invariants(nodes: usize, defect: usize) -> Result<InvariantsReport> {
    if nodes > MAX_QUARTIC_NODES {
        return Err(Error::OutOfRange(format!(
            "{nodes} nodes, a nodal quartic has at most {MAX_QUARTIC_NODES}"
        )));
    }
    if defect > nodes {
        return Err(Error::OutOfRange(format!("defect {defect} exceeds {nodes} nodes")));
    }
    let h11 = 1 + defect as i64;
    let h21 = CUBICS - QUARTIC_CORRECTION - nodes as i64 + defect as i64;
    Ok(InvariantsReport {
        nodes,
        defect,
        h11,
        h21,
        chi: 2 * (1 + h11) - 2 * h21,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conclusion {
    QFactorial,
    NotQFactorial,
    NonRational,
    Inconclusive,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::QFactorial => "QFactorial",
            Conclusion::NotQFactorial => "NotQFactorial",
            Conclusion::NonRational => "NonRational",
            Conclusion::Inconclusive => "Inconclusive",
        })
    }
}

pub mod citation {
    pub const EULER_DEL_PEZZO_FIBRATION: &str = "del-pezzo-fibration-euler-criterion";
    pub const CONIC_BUNDLE_DISCRIMINANT: &str = "conic-bundle-discriminant-criterion";
    pub const QUARTIC_EIGHT_NODES: &str = "nodal-quartic-at-most-8-nodes";
    pub const QUARTIC_NINE_NODES: &str = "nodal-quartic-9-nodes-plane";
    pub const HYPERSURFACE_LINEAR_BOUND: &str = "nodal-hypersurface-2d-4-bound";
    pub const CONJECTURE_SQUARE: &str = "factoriality-conjecture-square-bound";
    pub const CONJECTURE_NO_PLANE: &str = "factoriality-conjecture-no-plane-bound";
    pub const CONJECTURE_NO_PLANE_QUADRIC: &str = "factoriality-conjecture-no-plane-quadric-bound";
    pub const NO_RULE: &str = "no-applicable-rule";
}

pub mod assumption {
    pub const STANDARD_FIBRATION: &str = "standard del Pezzo fibration assumed";
    pub const NOT_STANDARD: &str = "fibration not asserted standard; criterion not applied";
    pub const STANDARD_CONIC_BUNDLE: &str = "standard conic bundle assumed";
    pub const CONJECTURAL: &str = "conjectural";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub citation: &'static str,
    pub assumptions: Vec<&'static str>,
}

impl Verdict {
    fn new(conclusion: Conclusion, citation: &'static str, assumptions: &[&'static str]) -> Self {
        Verdict {
            conclusion,
            citation,
            assumptions: assumptions.to_vec(),
        }
    }

    pub fn is_conjectural(&self) -> bool {
        self.assumptions.contains(&assumption::CONJECTURAL)
    }
}

/// Non-rationality of a standard degree-4 del Pezzo fibration over `P^1`
/// from the Euler characteristic of its total space.
pub fn valera_verdict(chi: i64, standard: bool) -> Verdict {
    let cite = citation::EULER_DEL_PEZZO_FIBRATION;
    if !standard {
        return Verdict::new(Conclusion::Inconclusive, cite, &[assumption::NOT_STANDARD]);
    }
    let conclusion = if [0, -8, -4].contains(&chi) {
        Conclusion::Inconclusive
    } else {
        Conclusion::NonRational
    };
    Verdict::new(conclusion, cite, &[assumption::STANDARD_FIBRATION])
}

/// `a s + b l` on the Hirzebruch surface `F_r`, where `s` is the negative
/// section and `l` a fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub r: u32,
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub fn new(r: u32, a: i64, b: i64) -> Self {
        DivisorClass { r, a, b }
    }

    pub fn section(r: u32) -> Self {
        Self::new(r, 1, 0)
    }

    pub fn fibre(r: u32) -> Self {
        Self::new(r, 0, 1)
    }

    pub fn add(self, other: Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::HirzebruchMismatch(self.r, other.r));
        }
        Ok(Self::new(self.r, self.a + other.a, self.b + other.b))
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.r, k * self.a, k * self.b)
    }

    /// Both coefficients non-negative; the zero class counts.
    pub fn is_effective(self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn fr_intersect(d1: DivisorClass, d2: DivisorClass) -> Result<i64> {
    if d1.r != d2.r {
        return Err(Error::HirzebruchMismatch(d1.r, d2.r));
    }
    Ok(-(d1.r as i64) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b)
}

pub fn fr_canonical(r: i64) -> Result<DivisorClass> {
    let r = u32::try_from(r).map_err(|_| Error::OutOfRange(format!("Hirzebruch index {r} is negative")))?;
    Ok(DivisorClass::new(r, -2, -(r as i64 + 2)))
}

/// Class of the discriminant curve of a conic bundle over `F_r`, from the
/// `K^2` of the surfaces over a fibre `l` and over the section `s`: a conic
/// bundle surface has `8 - K^2` degenerate fibres.
pub fn discriminant_class(k2_over_fibre: i64, k2_over_section: i64, r: i64) -> Result<DivisorClass> {
    if k2_over_fibre > 8 || k2_over_section > 8 {
        return Err(Error::OutOfRange("K^2 of a conic bundle surface is at most 8".into()));
    }
    let r = u32::try_from(r).map_err(|_| Error::OutOfRange(format!("Hirzebruch index {r} is negative")))?;
    let a = 8 - k2_over_fibre;
    let b = (8 - k2_over_section) + r as i64 * a;
    Ok(DivisorClass::new(r, a, b))
}

/// `2K + D` for a discriminant `D`; effective means non-rational.
pub fn adjoint_class(delta: DivisorClass) -> DivisorClass {
    let k = DivisorClass::new(delta.r, -2, -(delta.r as i64 + 2));
    k.scale(2).add(delta).expect("same surface")
}

pub fn shokurov_verdict(delta: DivisorClass) -> Verdict {
    let conclusion = if adjoint_class(delta).is_effective() {
        Conclusion::NonRational
    } else {
        Conclusion::Inconclusive
    };
    Verdict::new(
        conclusion,
        citation::CONIC_BUNDLE_DISCRIMINANT,
        &[assumption::STANDARD_CONIC_BUNDLE],
    )
}

/// Q-factoriality from the number of nodes of a nodal hypersurface of
/// degree `d` in `P^4`. Proven rules are tried before conjectural ones.
pub fn bound_verdict(d: u32, nodes: usize, contains_plane: bool, contains_quadric: bool) -> Result<Verdict> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("degree {d} is below 2")));
    }
    if d == 4 && nodes > MAX_QUARTIC_NODES {
        return Err(Error::OutOfRange(format!(
            "a nodal quartic has at most {MAX_QUARTIC_NODES} nodes, got {nodes}"
        )));
    }
    let n = nodes as i64;
    let d = d as i64;
    if d == 4 && n <= 8 {
        return Ok(Verdict::new(Conclusion::QFactorial, citation::QUARTIC_EIGHT_NODES, &[]));
    }
    if d == 4 && n == 9 {
        let c = if contains_plane {
            Conclusion::NotQFactorial
        } else {
            Conclusion::QFactorial
        };
        return Ok(Verdict::new(c, citation::QUARTIC_NINE_NODES, &[]));
    }
    if n <= 2 * d - 4 {
        return Ok(Verdict::new(Conclusion::QFactorial, citation::HYPERSURFACE_LINEAR_BOUND, &[]));
    }
    let conj = &[assumption::CONJECTURAL];
    if n < (d - 1) * (d - 1) {
        return Ok(Verdict::new(Conclusion::QFactorial, citation::CONJECTURE_SQUARE, conj));
    }
    let edge = 2 * (d - 1) * (d - 2);
    if n < edge && !contains_plane {
        return Ok(Verdict::new(Conclusion::QFactorial, citation::CONJECTURE_NO_PLANE, conj));
    }
    if n <= edge && !contains_plane && !contains_quadric {
        return Ok(Verdict::new(Conclusion::QFactorial, citation::CONJECTURE_NO_PLANE_QUADRIC, conj));
    }
    Ok(Verdict::new(Conclusion::Inconclusive, citation::NO_RULE, &[]))
}
