use std::fs;
use std::path::{Path, PathBuf};

use nrt_core::algebra::{MultiPoly, QuadElement};
use nrt_core::code::{codes_equivalent, parse_code, write_code, Limits, NrtCode};
use nrt_core::constructions::{
    classification_completeness, classify_ns4, construct_cn, construct_co, construct_cort,
    construct_interleave, construct_padded_concat, extended_hamming_8_4, Ns4Case,
};
use nrt_core::invariants::{
    closed_form_molien, express_in_basis, general_self_dual_group, invariant_space_basis,
    is_invariant, jacobian_independent, known_bases, known_basis, molien_series, named_group,
    reynolds, InvariantKind, KnownBasis, MatrixGroup, ReynoldsMode,
};
use nrt_core::shape::{
    macwilliams_transform, theta_matrix, verify_theta_properties, ShapeEnumerator,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Command, ConstructKind, Failure, GroupChoice, GroupName, MacwilliamsArgs, Mode};

/// A command's result in both output forms, built from the same data.
pub struct Report {
    pub text: String,
    pub json: Value,
}

type Outcome = Result<Report, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_code(path: &Path) -> Result<NrtCode, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))
}

fn code_json(c: &NrtCode) -> Value {
    json!({
        "q": c.q(),
        "n": c.n(),
        "s": c.s(),
        "k": c.k(),
        "generator": c.generator().row_vecs(),
        "self_orthogonal": c.is_self_orthogonal(),
        "self_dual": c.is_self_dual(),
    })
}

fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly, Failure> {
    Ok(MultiPoly::parse_with_vars(text, nvars)?)
}

pub fn run(cmd: &Command, lim: &Limits) -> Outcome {
    match cmd {
        Command::ShapeEnum { code } => shape_enum(code, lim),
        Command::Dual { code, out } => dual(code, out.as_deref()),
        Command::Macwilliams(args) => macwilliams(args, lim),
        Command::Theta { s, q, verify } => theta(*s, *q, *verify),
        Command::Molien(choice) => molien(choice),
        Command::Reynolds { group, poly, mode } => reynolds_cmd(*group, poly, *mode),
        Command::InvariantBasis { group, degree } => invariant_basis(*group, *degree),
        Command::Jacobian { polys, vars } => jacobian(polys, *vars),
        Command::Classify {
            q,
            completeness,
            out_dir,
        } => classify(*q, *completeness, out_dir.as_deref(), lim),
        Command::Construct { kind, codes, out } => construct(*kind, codes, out.as_deref()),
        Command::Equivalent { codes } => equivalent(codes, lim),
        Command::KnownBases {
            name,
            express,
            verify,
        } => known(*name, express.as_deref(), *verify),
    }
}

fn shape_enum(path: &Path, lim: &Limits) -> Outcome {
    let c = read_code(path)?;
    let h = ShapeEnumerator::of_code(&c, lim)?;
    Ok(Report {
        text: format!("{h}\n"),
        json: json!({ "code": code_json(&c), "enumerator": h }),
    })
}

fn dual(path: &Path, out: Option<&Path>) -> Outcome {
    let d = read_code(path)?.dual();
    let text = write_code(&d);
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    Ok(Report {
        text,
        json: json!({ "dual": code_json(&d) }),
    })
}

fn macwilliams(args: &MacwilliamsArgs, lim: &Limits) -> Outcome {
    if let Some(path) = &args.code {
        let c = read_code(path)?;
        let h = ShapeEnumerator::of_code(&c, lim)?;
        let transformed = macwilliams_transform(&h, c.q(), &BigInt::from(c.size()))?;
        let direct = ShapeEnumerator::of_code(&c.dual(), lim)?;
        if transformed != direct {
            return Err(Failure::Domain(format!(
                "transform {transformed} differs from direct dual enumerator {direct}"
            )));
        }
        let text = format!(
            "enumerator: {h}\ntransform: {transformed}\ndual enumerator: {direct}\nmatch: OK\n"
        );
        return Ok(Report {
            text,
            json: json!({ "enumerator": h, "transform": transformed, "dual_enumerator": direct, "match": true }),
        });
    }
    let (Some(poly), Some(s), Some(q), Some(size)) = (&args.enumerator, args.s, args.q, &args.size)
    else {
        return Err(usage(
            "give either --code or --enumerator with --s, --q and --size",
        ));
    };
    let size: BigInt = size
        .parse()
        .map_err(|_| usage(format!("--size '{size}' is not an integer")))?;
    let h = ShapeEnumerator::parse(s, poly)?;
    let transformed = macwilliams_transform(&h, q, &size)?;
    Ok(Report {
        text: format!("transform: {transformed}\n"),
        json: json!({ "enumerator": h, "transform": transformed }),
    })
}

fn linear_factor(root: &QuadElement, negative: bool, mult: usize) -> String {
    let sign = if negative { '+' } else { '-' };
    let base = format!("(λ{sign}{root})");
    if mult == 1 {
        base
    } else {
        format!("{base}^{mult}")
    }
}

fn theta(s: usize, q: u32, verify: bool) -> Outcome {
    let t = theta_matrix(s, q)?;
    let mut text = t.to_string();
    let mut out = json!({ "s": s, "q": q, "matrix": t.entries });
    if verify {
        if q != 2 {
            return Err(usage("--verify checks the binary matrix; use --q 2"));
        }
        let r = verify_theta_properties(s)?;
        let charpoly = format!(
            "{}{}",
            linear_factor(&r.spectrum.beta1, false, r.spectrum.r1),
            linear_factor(&r.spectrum.beta1, true, r.spectrum.r2)
        );
        let minpoly = r.min_poly.format("λ", true);
        text.push_str(&format!(
            "trace={} det={} charpoly={charpoly}\n",
            r.trace, r.det
        ));
        text.push_str(&format!("minpoly={minpoly}\n"));
        text.push_str("checks: square OK, trace OK, det OK, charpoly OK, minpoly OK\n");
        out["trace"] = json!(r.trace.to_string());
        out["det"] = json!(r.det.to_string());
        out["charpoly"] = json!(charpoly);
        out["minpoly"] = json!(minpoly);
        out["multiplicities"] = json!([r.spectrum.r1, r.spectrum.r2]);
        out["checks"] = json!({ "square": true, "trace": true, "det": true, "charpoly": true, "minpoly": true });
    }
    Ok(Report { text, json: out })
}

fn group(name: GroupName) -> Result<MatrixGroup, Failure> {
    Ok(named_group(name.as_str())?)
}

fn molien(choice: &GroupChoice) -> Outcome {
    let (label, g) = match (choice.group, choice.s) {
        (Some(name), _) => (name.as_str().to_string(), group(name)?),
        (None, Some(s)) => (
            format!("self-dual group, s={s}"),
            general_self_dual_group(s)?,
        ),
        (None, None) => return Err(usage("give --group or --s")),
    };
    let m = molien_series(&g, choice.degree)?;
    let mut text = format!("group {label} order {}\n{}\n", g.order(), m.closed.pretty());
    let mut out = json!({ "group": label, "order": g.order(), "molien": m });
    if let Some(s) = choice.s {
        let closed = closed_form_molien(s)?;
        let ok = closed == m.closed;
        text.push_str(&format!(
            "closed form: {} {}\n",
            closed.pretty(),
            if ok { "OK" } else { "MISMATCH" }
        ));
        out["closed_form"] = json!({ "series": closed.pretty(), "matches": ok });
        if !ok {
            return Err(Failure::Domain(format!(
                "closed form {} differs from {}",
                closed.pretty(),
                m.closed.pretty()
            )));
        }
    }
    text.push_str("degree dimension\n");
    for (d, c) in m.coeffs.iter().enumerate() {
        text.push_str(&format!("{d} {c}\n"));
    }
    Ok(Report { text, json: out })
}

fn reynolds_cmd(name: GroupName, poly: &str, mode: Mode) -> Outcome {
    let g = group(name)?;
    let f = parse_poly(poly, g.dim())?;
    let mode_core = match mode {
        Mode::Sum => ReynoldsMode::Sum,
        Mode::Average => ReynoldsMode::Average,
    };
    let r = reynolds(&g, &f, mode_core)?;
    let inv = is_invariant(&g, &f)?;
    let mode_name = if mode == Mode::Sum { "sum" } else { "average" };
    Ok(Report {
        text: format!("{r}\n"),
        json: json!({
            "group": name.as_str(),
            "order": g.order(),
            "mode": mode_name,
            "input": f.to_string(),
            "input_invariant": inv,
            "result": r.to_string(),
        }),
    })
}

fn invariant_basis(name: GroupName, degree: u32) -> Outcome {
    let g = group(name)?;
    let basis = invariant_space_basis(&g, degree)?;
    let mut text = format!(
        "group {} degree {degree} dimension {}\n",
        name.as_str(),
        basis.len()
    );
    for p in &basis {
        text.push_str(&format!("{p}\n"));
    }
    let polys: Vec<String> = basis.iter().map(ToString::to_string).collect();
    Ok(Report {
        text,
        json: json!({ "group": name.as_str(), "degree": degree, "dimension": basis.len(), "basis": polys }),
    })
}

fn jacobian(polys: &[String], vars: Option<usize>) -> Outcome {
    let nvars = vars.unwrap_or(polys.len());
    let fs = polys
        .iter()
        .map(|p| parse_poly(p, nvars))
        .collect::<Result<Vec<_>, _>>()?;
    let independent = jacobian_independent(&fs)?;
    let word = if independent {
        "independent"
    } else {
        "dependent"
    };
    let shown: Vec<String> = fs.iter().map(ToString::to_string).collect();
    Ok(Report {
        text: format!("{word}\n"),
        json: json!({ "polynomials": shown, "independent": independent }),
    })
}

fn compact_rows(rows: &[Vec<u32>], s: usize) -> String {
    rows.iter()
        .map(|r| {
            r.chunks(s)
                .map(|b| b.iter().map(u32::to_string).collect::<String>())
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn classify(q: u32, completeness: bool, out_dir: Option<&Path>, lim: &Limits) -> Outcome {
    let c = classify_ns4(q)?;
    let mut text = String::new();
    for (i, e) in c.entries.iter().enumerate() {
        let lambda = e.lambda.map_or("-".to_string(), |l| l.to_string());
        let dup = e
            .duplicate_of
            .map_or(String::new(), |d| format!(" (same code as #{d})"));
        text.push_str(&format!(
            "#{i} case {} family {} λ={lambda} [{}] {}{dup}\n",
            e.case.label(),
            e.family,
            compact_rows(&e.generator, e.case.s()),
            e.enumerator
        ));
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::Domain(format!("cannot create {}: {e}", dir.display())))?;
        for e in c.entries.iter().filter(|e| e.duplicate_of.is_none()) {
            let suffix = e.lambda.map_or(String::new(), |l| format!("-l{l}"));
            let path = dir.join(format!("{}-{}{suffix}.code", e.case.label(), e.family));
            write_file(&path, &write_code(&e.code))?;
        }
    }
    let mut out = json!({ "manifest": c });
    if completeness {
        let mut reports = Vec::new();
        for case in [Ns4Case::OneByFour, Ns4Case::TwoByTwo] {
            let r = classification_completeness(q, case, lim)?;
            text.push_str(&format!(
                "completeness case {}: {} self-dual codes in {} classes, {}\n",
                case.label(),
                r.self_dual_total,
                r.classes.len(),
                if r.is_complete() {
                    "complete"
                } else {
                    "INCOMPLETE"
                }
            ));
            for cl in &r.classes {
                text.push_str(&format!(
                    "  class size {} [{}] {} {}\n",
                    cl.size,
                    compact_rows(&cl.representative, case.s()),
                    cl.enumerator,
                    if cl.listed { "listed" } else { "unlisted" }
                ));
            }
            reports.push(json!({ "report": r, "complete": r.is_complete() }));
        }
        out["completeness"] = json!(reports);
    }
    Ok(Report { text, json: out })
}

fn construct(kind: ConstructKind, paths: &[PathBuf], out: Option<&Path>) -> Outcome {
    let inputs = paths
        .iter()
        .map(|p| read_code(p))
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |want: usize, what: &str| {
        if inputs.len() == want {
            Ok(())
        } else {
            Err(usage(format!(
                "{what} takes {want} --code input(s), got {}",
                inputs.len()
            )))
        }
    };
    let (name, code) = match kind {
        ConstructKind::Co => {
            arity(1, "co")?;
            ("co", construct_co(&inputs[0])?)
        }
        ConstructKind::Cort => {
            arity(1, "cort")?;
            ("cort", construct_cort(&inputs[0])?)
        }
        ConstructKind::Cn => {
            arity(1, "cn")?;
            ("cn", construct_cn(&inputs[0])?)
        }
        ConstructKind::Interleave => {
            arity(2, "interleave")?;
            ("interleave", construct_interleave(&inputs[0], &inputs[1])?)
        }
        ConstructKind::PaddedConcat => {
            if inputs.is_empty() {
                return Err(usage("padded-concat needs at least one --code input"));
            }
            ("padded-concat", construct_padded_concat(&inputs)?)
        }
        ConstructKind::ExtendedHamming => {
            arity(0, "extended-hamming")?;
            ("extended-hamming", extended_hamming_8_4())
        }
    };
    let text = write_code(&code);
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    Ok(Report {
        text,
        json: json!({ "construction": name, "code": code_json(&code) }),
    })
}

fn equivalent(paths: &[PathBuf], lim: &Limits) -> Outcome {
    let [a, b] = paths else {
        return Err(usage(format!(
            "equivalent takes exactly two --code inputs, got {}",
            paths.len()
        )));
    };
    let (a, b) = (read_code(a)?, read_code(b)?);
    let eq = codes_equivalent(&a, &b, lim)?;
    Ok(Report {
        text: if eq {
            "equivalent\n"
        } else {
            "not equivalent\n"
        }
        .to_string(),
        json: json!({ "equivalent": eq }),
    })
}

fn basis_json(b: &KnownBasis) -> Value {
    let entries: Vec<Value> = b
        .entries
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "kind": if e.kind == InvariantKind::Primary { "primary" } else { "secondary" },
                "degree": e.degree(),
                "polynomial": e.poly.to_string(),
            })
        })
        .collect();
    json!({ "name": b.name, "order": b.group.order(), "degrees": b.degrees(), "entries": entries })
}

fn basis_text(b: &KnownBasis) -> String {
    let mut t = format!(
        "{} order {} degrees {:?}\n",
        b.name,
        b.group.order(),
        b.degrees()
    );
    for e in &b.entries {
        let kind = if e.kind == InvariantKind::Primary {
            "primary"
        } else {
            "secondary"
        };
        t.push_str(&format!(
            "  {} {kind} degree {}: {}\n",
            e.label,
            e.degree(),
            e.poly
        ));
    }
    t
}

fn known(name: Option<GroupName>, express: Option<&str>, verify: Option<u32>) -> Outcome {
    let bases = match name {
        Some(n) => vec![known_basis(n.as_str())?],
        None => known_bases()?,
    };
    let mut text: String = bases.iter().map(basis_text).collect();
    let mut out = json!({ "bases": bases.iter().map(basis_json).collect::<Vec<_>>() });
    if let Some(d) = verify {
        for b in &bases {
            b.verify_decomposition(d)?;
            text.push_str(&format!(
                "{}: decomposition verified through degree {d}\n",
                b.name
            ));
        }
        out["verified_through"] = json!(d);
    }
    if let Some(p) = express {
        let b = &bases[0];
        let h = parse_poly(p, b.group.dim())?;
        let e = express_in_basis(&h, b)?;
        text.push_str(&format!("{e}\n"));
        out["expression"] = json!(e.to_string());
    }
    Ok(Report { text, json: out })
}
