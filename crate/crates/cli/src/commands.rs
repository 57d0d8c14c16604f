use std::fs;
use std::path::Path;

use nodal_core::conditions::ConstructionTrace;
use nodal_core::invariants::{adjoint_class, assumption, citation};
use nodal_core::{
    agp_check, bound_verdict, build_separating_cubic, classify_singularity, conditions_defect, cynk_invariants,
    designed_nodes, discriminant_class, fr_canonical, scan_singular, separating_form_oracle, shokurov_verdict,
    valera_verdict, AgpThresholds, ConicSemantics, Field, FamilyTag, NodeReport, PointConfiguration, QuarticSpec,
    Verdict,
};
use nodal_core::scalar::is_prime;
use serde_json::{json, Value};

use crate::parse::{self, ParseError};
use crate::report::Report;
use crate::{
    AgpArgs, ClassifyArgs, CliError, Command, Conics, DefectArgs, FamilyArgs, InvariantsArgs, Method, Rule,
    ScanArgs, SeparatorArgs, SpecArgs, VerdictArgs,
};

type Res<T> = Result<T, CliError>;

pub fn dispatch(cmd: &Command) -> Res<Report> {
    match cmd {
        Command::Defect(a) => defect(a),
        Command::Separator(a) => separator(a),
        Command::Agp(a) => agp(a),
        Command::Family(a) => family(a),
        Command::Scan(a) => scan(a),
        Command::Classify(a) => classify(a),
        Command::Invariants(a) => invariants(a),
        Command::Verdict(a) => verdict(a),
    }
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Res<()> {
    fs::write(path, body).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))
}

fn load_points(path: &Path) -> Res<PointConfiguration> {
    Ok(parse::parse_point_set(&read(path)?)?)
}

fn path_value(p: &Path) -> Value {
    p.display().to_string().into()
}

fn defect(a: &DefectArgs) -> Res<Report> {
    if a.degree == 0 {
        return Err(CliError::Invalid("--degree must be at least 1".into()));
    }
    let cfg = load_points(&a.points)?;
    let mut r = Report::new("defect");
    r.input("points", path_value(&a.points)).input("degree", a.degree);
    let d = conditions_defect(&cfg, a.degree)?;
    let monomials = nodal_core::monomial_basis(d.ambient + 1, d.degree).len();
    let unseparated: Vec<usize> = (0..d.points).filter(|&i| !d.separable[i]).collect();
    r.result("ambient", d.ambient)
        .result("count", d.points)
        .result("monomials", monomials)
        .result("rank", d.rank)
        .result("defect", d.defect)
        .result("independent", d.independent())
        .result("unseparated", unseparated);
    Ok(r)
}

fn trace_value(t: &ConstructionTrace) -> Value {
    let factors: Vec<Value> = t
        .factors
        .iter()
        .map(|f| f.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ").into())
        .collect();
    let mut v = json!({
        "ambient": t.ambient,
        "case": t.case,
        "padded": t.padded,
        "aux": t.aux.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "factors": factors,
    });
    if !t.pencil.is_empty() {
        v["pencil"] = json!(t.pencil);
    }
    if let Some(vx) = &t.vertex {
        v["vertex"] = vx.to_string().into();
    }
    if let Some(inner) = &t.inner {
        v["inner"] = trace_value(inner);
    }
    v
}

fn separator(a: &SeparatorArgs) -> Res<Report> {
    let cfg = load_points(&a.points)?;
    if a.exclude >= cfg.len() {
        return Err(CliError::Parse(ParseError::new(
            a.exclude.to_string(),
            format!("--exclude must be below the {} points in the file", cfg.len()),
        )));
    }
    let (sigma, p) = cfg.without(a.exclude)?;
    let mut r = Report::new("separator");
    r.input("points", path_value(&a.points))
        .input("exclude", a.exclude)
        .input("method", match a.method {
            Method::Constructive => "constructive",
            Method::Oracle => "oracle",
        });
    r.result("excluded", p.to_string()).result("count", sigma.len());
    match a.method {
        Method::Constructive => {
            let cert = build_separating_cubic(&sigma, &p)?;
            let value = cert.form.evaluate(&p)?;
            r.result("separable", true)
                .result("cubic", cert.form.to_string())
                .result("value_at_excluded", value.to_string())
                .result("verified", cert.verify())
                .result("trace", trace_value(&cert.trace));
        }
        Method::Oracle => match separating_form_oracle(&sigma, &p, 3)? {
            Some(f) => {
                let value = f.evaluate(&p)?;
                r.result("separable", true)
                    .result("cubic", f.to_string())
                    .result("value_at_excluded", value.to_string());
            }
            None => {
                r.result("separable", false).result("cubic", Value::Null);
            }
        },
    }
    Ok(r)
}

fn agp(a: &AgpArgs) -> Res<Report> {
    let semantics = match a.conics {
        Conics::Inclusive => ConicSemantics::Inclusive,
        Conics::Smooth => ConicSemantics::SmoothOnly,
    };
    let th = AgpThresholds::new(a.max_line, a.max_conic, a.max_plane)
        .map_err(|e| CliError::Invalid(e.to_string()))?
        .with_conics(semantics);
    let cfg = load_points(&a.points)?;
    let mut r = Report::new("agp");
    r.input("points", path_value(&a.points))
        .input("max_line", a.max_line)
        .input("max_conic", a.max_conic)
        .input("max_plane", a.max_plane)
        .input("conics", match a.conics {
            Conics::Inclusive => "inclusive",
            Conics::Smooth => "smooth",
        });
    let rep = agp_check(&cfg, &th)?;
    r.result("count", cfg.len())
        .result("ambient", cfg.ambient_dim())
        .result("passes", rep.passes());
    for (name, inc, ok) in [
        ("line", &rep.line, rep.line_ok),
        ("conic", &rep.conic, rep.conic_ok),
        ("plane", &rep.plane, rep.plane_ok),
    ] {
        r.result(name, json!({"max": inc.count, "ok": ok, "witness": inc.witness}));
    }
    Ok(r)
}

fn spec_from_args(s: &SpecArgs) -> Res<(QuarticSpec, Value)> {
    let named: Vec<(String, String)> = [
        ("h3", &s.h3),
        ("g3", &s.g3),
        ("a2", &s.a2),
        ("b2", &s.b2),
        ("b3", &s.b3),
        ("h2", &s.h2),
        ("g2", &s.g2),
        ("g1", &s.g1),
    ]
    .into_iter()
    .filter_map(|(n, v)| v.as_ref().map(|v| (n.to_string(), v.clone())))
    .collect();
    match (&s.spec, &s.tag) {
        (Some(_), Some(_)) => Err(CliError::Invalid("give either --spec or --tag, not both".into())),
        (None, None) => Err(CliError::Invalid("a quartic is needed: --spec <path> or --tag <family>".into())),
        (Some(path), None) => {
            if !named.is_empty() || !s.factors.is_empty() || s.equation.is_some() {
                return Err(CliError::Invalid("constituent flags cannot be combined with --spec".into()));
            }
            Ok((parse::parse_spec(&read(path)?)?, path_value(path)))
        }
        (None, Some(tag)) => {
            let mut factors = Vec::new();
            for f in &s.factors {
                let (n, l) = f
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(f.clone(), "expected `name=l1;l2;...`"))?;
                factors.push((n.trim().to_string(), l.to_string()));
            }
            let spec = parse::assemble_spec(tag, &named, &factors, s.equation.as_deref())?;
            Ok((spec, tag.clone().into()))
        }
    }
}

fn node_value(n: &NodeReport) -> Value {
    json!({"point": n.point.to_string(), "hessian_rank": n.hessian_rank, "class": n.class.to_string()})
}

fn family(a: &FamilyArgs) -> Res<Report> {
    let (spec, source) = spec_from_args(&a.source)?;
    let mut r = Report::new("family");
    r.input("source", source);
    r.result("family", spec.tag.name()).result("quartic", spec.form.to_string());
    if matches!(spec.tag, FamilyTag::Burkhardt | FamilyTag::Custom) {
        return Err(CliError::Invalid(format!(
            "the {} family has no designed node system; use `scan`",
            spec.tag
        )));
    }
    let nodes = designed_nodes(&spec)?;
    let reports: Vec<NodeReport> = nodes
        .points()
        .iter()
        .map(|p| classify_singularity(&spec, p))
        .collect::<Result<_, _>>()?;
    let node_count = reports.iter().filter(|n| n.class == nodal_core::Singularity::Node).count();
    let cubic = conditions_defect(&nodes, 3)?;
    r.result("designed", nodes.len())
        .result("nodes", node_count)
        .result("all_nodes", node_count == nodes.len())
        .result("cubic_rank", cubic.rank)
        .result("defect", cubic.defect)
        .result("points", reports.iter().map(node_value).collect::<Vec<_>>());
    if let Some(path) = &a.nodes_out {
        let body: String = nodes.points().iter().map(|p| format!("{p}\n")).collect();
        write(path, &format!("# designed nodes of the {} family\n{body}", spec.tag))?;
        r.input("nodes_out", path_value(path));
    }
    if let Some(path) = &a.spec_out {
        write(path, &parse::format_spec(&spec))?;
        r.input("spec_out", path_value(path));
    }
    Ok(r)
}

fn checked_prime(p: u64) -> Res<Field> {
    if p < 5 || !is_prime(p) {
        return Err(CliError::Parse(ParseError::new(p.to_string(), "--prime must be a prime at least 5")));
    }
    Field::prime(p).map_err(|e| CliError::Invalid(e.to_string()))
}

fn scan(a: &ScanArgs) -> Res<Report> {
    checked_prime(a.prime)?;
    let (spec, source) = spec_from_args(&a.source)?;
    let mut r = Report::new("scan");
    r.input("source", source).input("prime", a.prime);
    let res = scan_singular(&spec, a.prime, a.threads)?;
    r.result("enumerated", res.enumerated)
        .result("singular", res.singular_count())
        .result("nodes", res.node_count())
        .result("all_nodes", res.all_nodes())
        .result("bound_violated", res.bound_violated)
        .result("points", res.reports.iter().map(node_value).collect::<Vec<_>>());
    Ok(r)
}

fn classify(a: &ClassifyArgs) -> Res<Report> {
    let field = a.prime.map(checked_prime).transpose()?;
    let (spec, source) = spec_from_args(&a.source)?;
    let mut p = parse::parse_point(&a.point)?;
    if p.dim() != 4 {
        return Err(CliError::Parse(ParseError::new(a.point.clone(), "a point of P^4 needs five coordinates")));
    }
    let mut r = Report::new("classify");
    r.input("source", source).input("point", a.point.clone());
    if let Some(f) = field {
        p = p.reduce(f)?;
        r.input("prime", f.characteristic());
    }
    let n = classify_singularity(&spec, &p)?;
    r.result("point", n.point.to_string())
        .result("on_hypersurface", n.on_hypersurface)
        .result("gradient_vanishes", n.gradient_vanishes)
        .result("hessian_rank", n.hessian_rank)
        .result("class", n.class.to_string());
    Ok(r)
}

fn add_verdict(r: &mut Report, v: &Verdict) {
    r.result("verdict", v.conclusion.to_string());
    r.result("conjectural", v.is_conjectural());
    r.cite(v.citation);
    for a in &v.assumptions {
        r.assume(a);
    }
}

fn invariants(a: &InvariantsArgs) -> Res<Report> {
    let mut r = Report::new("invariants");
    r.input("nodes", a.nodes).input("defect", a.defect).input("standard", a.standard);
    let inv = cynk_invariants(a.nodes, a.defect)?;
    r.result("h11", inv.h11).result("h21", inv.h21).result("chi", inv.chi);
    if a.standard {
        add_verdict(&mut r, &valera_verdict(inv.chi, true));
    }
    Ok(r)
}

fn need<T: Copy>(v: Option<T>, flag: &str, rule: &str) -> Res<T> {
    v.ok_or_else(|| CliError::Invalid(format!("--rule {rule} needs --{flag}")))
}

fn verdict(a: &VerdictArgs) -> Res<Report> {
    let mut r = Report::new("verdict");
    match a.rule {
        Rule::Bound => {
            let d = need(a.degree, "degree", "bound")?;
            let n = need(a.nodes, "nodes", "bound")?;
            r.input("rule", "bound")
                .input("degree", d)
                .input("nodes", n)
                .input("plane", a.plane)
                .input("quadric", a.quadric);
            add_verdict(&mut r, &bound_verdict(d, n, a.plane, a.quadric)?);
        }
        Rule::Valera => {
            r.input("rule", "valera").input("standard", a.standard);
            let chi = match (a.chi, a.nodes, a.defect) {
                (Some(c), None, None) => {
                    r.input("chi", c);
                    c
                }
                (None, Some(n), Some(d)) => {
                    r.input("nodes", n).input("defect", d);
                    let c = cynk_invariants(n, d)?.chi;
                    r.result("chi", c);
                    c
                }
                _ => {
                    return Err(CliError::Invalid(
                        "--rule valera needs either --chi or both --nodes and --defect".into(),
                    ))
                }
            };
            add_verdict(&mut r, &valera_verdict(chi, a.standard));
        }
        Rule::Shokurov => {
            let k2l = need(a.k2l, "k2l", "shokurov")?;
            let k2s = need(a.k2s, "k2s", "shokurov")?;
            let fr = need(a.r, "r", "shokurov")?;
            r.input("rule", "shokurov").input("k2l", k2l).input("k2s", k2s).input("r", fr);
            let delta = discriminant_class(k2l, k2s, fr)?;
            let k = fr_canonical(fr)?;
            r.result("canonical", k.to_string())
                .result("discriminant", delta.to_string())
                .result("adjoint", adjoint_class(delta).to_string());
            add_verdict(&mut r, &shokurov_verdict(delta));
            r.assume(assumption::STANDARD_CONIC_BUNDLE);
        }
    }
    if r.citations.is_empty() {
        r.cite(citation::NO_RULE);
    }
    Ok(r)
}
