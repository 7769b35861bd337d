use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use minda_core::catalog::{self, MindaFunction, Orientation};
use minda_core::circle::{self, CircleScan};
use minda_core::extremal::synth_f0;
use minda_core::radius::{self, RadiusResult};
use minda_core::verify::{self, HInput, Schwarz, Verdict};
use minda_core::PowerSeries;
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::expr::GExpr;
use crate::report::{key_values, sig12, table, RunReport};
use crate::{ClassArgs, CliError, CliResult, CurveObject, Kind, Probe};

/// Points of the pre-root scan used to certify a reported radius.
pub const CERTIFY_POINTS: usize = 4096;

type Output = CliResult<(RunReport, String)>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

fn orientation_sign(o: Orientation) -> &'static str {
    match o {
        Orientation::Positive => "+",
        Orientation::Negative => "-",
        Orientation::Flat => "0",
    }
}

fn domain_note(f: &MindaFunction) -> Value {
    if f.id() == "booth" {
        json!({
            "formula": "r_alpha = (-1 + sqrt(1 + 4 alpha)) / (2 alpha), positive root of alpha r^2 + r - 1 = 0",
            "value": f.domain_radius(),
        })
    } else {
        json!({ "formula": "1", "value": f.domain_radius() })
    }
}

fn catalog_entry(id: &str) -> CliResult<Value> {
    let defaults = catalog::default_params(id)?;
    let f = catalog::get(id, &defaults)?;
    let parameters: Vec<Value> = catalog::parameter_ranges(id)?
        .iter()
        .map(|(name, range)| json!({ "name": name, "range": range, "default": defaults[*name] }))
        .collect();
    Ok(json!({
        "id": id,
        "label": f.label(),
        "formula": f.formula(),
        "parameters": parameters,
        "orientation": to_value(&f.orientation()),
        "min_modulus_form": f.min_modulus_form().to_string(),
        "convex": f.is_convex(),
        "domain_radius": domain_note(&f),
    }))
}

pub fn catalog(id: Option<&str>) -> Output {
    let mut inputs = BTreeMap::new();
    let ids: Vec<String> = match id {
        Some(id) => {
            let key = id.replace('-', "_");
            catalog::parameter_ranges(&key)?;
            inputs.insert("id".into(), Value::from(key.clone()));
            vec![key]
        }
        None => catalog::IDS.iter().map(|s| s.to_string()).collect(),
    };
    let entries = ids.iter().map(|id| catalog_entry(id)).collect::<CliResult<Vec<_>>>()?;

    let human = if let [entry] = entries.as_slice() {
        let f = catalog::get(&ids[0], &catalog::default_params(&ids[0])?)?;
        let params: Vec<String> = entry["parameters"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|p| format!("{} ({})", p["name"].as_str().unwrap_or(""), p["range"].as_str().unwrap_or("")))
            .collect();
        key_values(&[
            ("id", ids[0].clone()),
            ("label", f.label().to_string()),
            ("formula", f.formula()),
            ("parameters", if params.is_empty() { "none".into() } else { params.join(", ") }),
            ("orientation", orientation_sign(f.orientation()).to_string()),
            ("min modulus", f.min_modulus_form().to_string()),
            ("convex", f.is_convex().to_string()),
            ("domain radius", entry["domain_radius"]["formula"].as_str().unwrap_or("").to_string()),
        ])
    } else {
        let rows: Vec<Vec<String>> = ids
            .iter()
            .map(|id| {
                let f = catalog::get(id, &catalog::default_params(id).expect("known id"))
                    .expect("defaults are admissible");
                let params: Vec<&str> = catalog::parameter_ranges(id)
                    .expect("known id")
                    .iter()
                    .map(|(n, _)| *n)
                    .collect();
                vec![
                    id.clone(),
                    params.join(","),
                    orientation_sign(f.orientation()).into(),
                    f.min_modulus_form().to_string(),
                    f.label().to_string(),
                ]
            })
            .collect();
        table(&["id", "params", "orient", "min modulus", "label"], &rows)
    };
    let report = RunReport::new("catalog", inputs, json!({ "entries": entries }))
        .provenance("catalog of Ma-Minda functions psi with psi(0) = 1");
    Ok((report, human))
}

fn radius_human(res: &RadiusResult, certified: bool) -> String {
    key_values(&[
        ("root", sig12(res.root)),
        ("bracket", format!("[{}, {}]", sig12(res.bracket.0), sig12(res.bracket.1))),
        ("residual", sig12(res.residual_at_root)),
        ("tolerance", sig12(res.tolerance)),
        ("iterations", res.iterations.to_string()),
        ("capped", res.capped.to_string()),
        ("least root", certified.to_string()),
    ])
}

pub fn radius(
    class: &ClassArgs,
    kind: Kind,
    second: Option<(String, MindaFunction)>,
    mbeta: Option<f64>,
    gamma: Option<f64>,
) -> Output {
    let f = class.build()?;
    let mut inputs = BTreeMap::new();
    class.echo(&mut inputs)?;
    inputs.insert("kind".into(), to_value(&kind_name(kind)));
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {}", kind_name(kind))))
    };
    let (res, label) = match kind {
        Kind::MajorizeStarlike => (
            radius::majorization_radius_starlike(&f)?,
            "majorization radius in S*(psi): least root of (1 - r^2) m_r - 2r, m_r = min |psi| on |z| = r",
        ),
        Kind::Booth => {
            if f.id() != "booth" {
                return Err(CliError::Usage("--kind booth needs --class booth".into()));
            }
            (
                radius::majorization_radius_starlike(&f)?,
                "majorization radius for the Booth lemniscate, capped at the domain radius r_alpha",
            )
        }
        Kind::MajorizeConvex => (
            radius::majorization_radius_convex(&f)?,
            "majorization radius in C(phi) through the Briot-Bouquet partner psi",
        ),
        Kind::Hallenbeck => (
            radius::hallenbeck_radius(&f)?,
            "majorization radius for the mean-value partner psi(z) = integral of phi(sz) over s in [0, 1]",
        ),
        Kind::SqrtVariant => (
            radius::sqrt_variant_radius(&f)?,
            "majorization radius for the square-root variant of the mean-value partner",
        ),
        Kind::ProductMbeta | Kind::ProductOrder => {
            let (id2, g) = second.expect("product kinds carry a second class");
            inputs.insert("class2".into(), Value::from(id2));
            let p2: BTreeMap<&str, f64> = g.params().iter().map(|(k, v)| (k.as_str(), *v)).collect();
            if !p2.is_empty() {
                inputs.insert("params2".into(), to_value(&p2));
            }
            if kind == Kind::ProductMbeta {
                let beta = need(mbeta, "mbeta")?;
                inputs.insert("mbeta".into(), Value::from(beta));
                (
                    radius::product_mbeta_radius(&f, &g, beta)?,
                    "radius for the product class in M(beta): least root of psi1(r) + psi2(r) - 1 - beta",
                )
            } else {
                let gamma = need(gamma, "gamma")?;
                inputs.insert("gamma".into(), Value::from(gamma));
                (
                    radius::product_order_radius(&f, &g, gamma)?,
                    "radius for the product class of order gamma: least root of psi1(-r) + psi2(-r) - 1 - gamma",
                )
            }
        }
    };
    let certified = res.certify_least_root(CERTIFY_POINTS);
    let mut results = to_value(&res);
    results["least_root_certified"] = Value::from(certified);
    results["certify_points"] = Value::from(CERTIFY_POINTS);
    if kind == Kind::Booth {
        results["domain_radius"] = Value::from(f.domain_radius());
    }
    let human = radius_human(&res, certified);
    let report = RunReport::new("radius", inputs, results)
        .provenance(label)
        .provenance("least positive root: 512-point sign scan from 1e-6, then Brent");
    Ok((report, human))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::MajorizeStarlike => "majorize-starlike",
        Kind::MajorizeConvex => "majorize-convex",
        Kind::Hallenbeck => "hallenbeck",
        Kind::SqrtVariant => "sqrt-variant",
        Kind::ProductMbeta => "product-mbeta",
        Kind::ProductOrder => "product-order",
        Kind::Booth => "booth",
    }
}

pub fn bohr(class: &ClassArgs, order: usize) -> Output {
    let f = class.build()?;
    let mut inputs = BTreeMap::new();
    class.echo(&mut inputs)?;
    let res = radius::bohr_radius_with_order(&f, order)?;
    let mut results = to_value(&res);
    let mut pairs = vec![
        ("koebe radius", sig12(res.koebe)),
        ("koebe method", to_value(&res.koebe_method).as_str().unwrap_or("").to_string()),
        ("r0 (majorant)", sig12(res.root_r0)),
        ("r0 (growth)", sig12(res.root_f0)),
        ("bohr radius", sig12(res.bohr_radius)),
        ("1/3 cap active", res.sharp_flag.to_string()),
        ("tolerance", sig12(res.tolerance)),
    ];
    let mut report_labels = vec![
        "Koebe radius r* = |f0(-1)|, extremal f0 = z exp(integral of (psi(t) - 1)/t)",
        "Bohr radius min(r0, 1/3), r0 the least root of sum |t_n| r^n = r*",
    ];
    if f.id() == "janowski" {
        let (d, e) = (f.param("D").unwrap_or(f64::NAN), f.param("E").unwrap_or(f64::NAN));
        if let Ok(special) = radius::janowski_bohr_special(d, e) {
            pairs.push(("janowski sharp", sig12(special.root)));
            results["janowski_special"] = to_value(&special);
            report_labels.push("sharp Janowski Bohr radius from the closed-form extremal");
        }
    }
    let mut report = RunReport::new("bohr", inputs, results);
    for l in report_labels {
        report = report.provenance(l);
    }
    Ok((report, key_values(&pairs)))
}

pub fn distort(class: &ClassArgs, radii: &[f64], table1: bool, order: usize) -> Output {
    let mut inputs = BTreeMap::new();
    let (f, radii) = if table1 {
        if !radii.is_empty() {
            return Err(CliError::Usage("--table1 fixes the radii; drop --r".into()));
        }
        if class.class.as_deref().is_some_and(|c| c != "cardioid") {
            return Err(CliError::Usage("--table1 is the cardioid table".into()));
        }
        inputs.insert("table1".into(), Value::from(true));
        inputs.insert("class".into(), Value::from("cardioid"));
        (MindaFunction::cardioid(), radius::TABLE1_RADII.to_vec())
    } else {
        if radii.is_empty() {
            return Err(CliError::Usage("give --r or --table1".into()));
        }
        if let Some(bad) = radii.iter().find(|r| !(**r > 0.0 && **r <= 1.0)) {
            return Err(CliError::Usage(format!("radius {bad} outside (0, 1]")));
        }
        class.echo(&mut inputs)?;
        inputs.insert("r".into(), to_value(&radii));
        (class.build()?, radii.to_vec())
    };
    let rows = radius::distortion_rows(&f, &radii, order)?;
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            let mut v = to_value(row);
            v["on_real_axis"] = Value::from(row.on_real_axis());
            v
        })
        .collect();
    let human_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                sig12(row.r),
                sig12(row.theta1),
                sig12(row.theta2),
                sig12(row.min_modulus),
                sig12(row.max_modulus),
                sig12(row.lower),
                sig12(row.upper),
            ]
        })
        .collect();
    let human = table(
        &["r", "theta1", "theta2", "min|psi|", "max|psi|", "lower", "upper"],
        &human_rows,
    );
    let results = json!({
        "rows": json_rows,
        "theta_tolerance": CircleScan::default().theta_tol,
    });
    let report = RunReport::new("distort", inputs, results)
        .provenance("distortion bounds min|psi| (-f0(-r)/r) <= |f'(z)| <= max|psi| f0(r)/r on |z| = r");
    Ok((report, human))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn svg_polyline(points: &[(f64, Complex64)]) -> String {
    let finite: Vec<Complex64> = points.iter().map(|p| p.1).filter(|w| w.re.is_finite() && w.im.is_finite()).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for w in &finite {
        x0 = x0.min(w.re);
        x1 = x1.max(w.re);
        y0 = y0.min(-w.im);
        y1 = y1.max(-w.im);
    }
    let size = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.05 * size;
    let mut pts = String::new();
    for w in &finite {
        let _ = write!(pts, "{},{} ", w.re, -w.im);
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\" points=\"{}\"/>\n</svg>\n",
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad,
        size / 500.0,
        pts.trim_end()
    )
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::Null
    }
}

pub fn curve(
    class: &ClassArgs,
    object: CurveObject,
    r: f64,
    n_points: usize,
    out: Option<&Path>,
    svg: Option<&Path>,
    order: usize,
) -> Output {
    if n_points < 64 {
        return Err(CliError::Usage(format!("--n-points must be at least 64, got {n_points}")));
    }
    if !(r > 0.0 && r <= 1.0) {
        return Err(CliError::Usage(format!("--r {r} outside (0, 1]")));
    }
    let f = class.build()?;
    let mut inputs = BTreeMap::new();
    class.echo(&mut inputs)?;
    inputs.insert("object".into(), Value::from(match object {
        CurveObject::PsiBoundary => "psi-boundary",
        CurveObject::F0Image => "f0-image",
    }));
    inputs.insert("r".into(), Value::from(r));
    inputs.insert("n_points".into(), Value::from(n_points));

    let thetas = (0..n_points).map(|k| 2.0 * PI * k as f64 / n_points as f64);
    let points: Vec<(f64, Complex64)> = match object {
        CurveObject::PsiBoundary => thetas
            .map(|t| Ok((t, f.eval(Complex64::from_polar(r, t))?)))
            .collect::<CliResult<_>>()?,
        CurveObject::F0Image => {
            let e = synth_f0(&f, order)?;
            thetas
                .map(|t| Ok((t, e.eval(Complex64::from_polar(r, t))?)))
                .collect::<CliResult<_>>()?
        }
    };

    let mut csv = String::from("theta,x,y\n");
    for (t, w) in &points {
        let _ = writeln!(csv, "{t},{},{}", w.re, w.im);
    }
    let extreme = |pick_max: bool| {
        points
            .iter()
            .filter(|(_, w)| w.norm().is_finite())
            .fold(None::<(f64, f64)>, |acc, (t, w)| {
                let m = w.norm();
                match acc {
                    Some((_, best)) if (pick_max && m <= best) || (!pick_max && m >= best) => acc,
                    _ => Some((*t, m)),
                }
            })
    };
    let as_json = |e: Option<(f64, f64)>| match e {
        Some((t, m)) => json!({ "theta": t, "value": m }),
        None => Value::Null,
    };
    let mut results = json!({
        "points": points
            .iter()
            .map(|(t, w)| json!([t, finite_or_null(w.re), finite_or_null(w.im)]))
            .collect::<Vec<_>>(),
        "grid_min_modulus": as_json(extreme(false)),
        "grid_max_modulus": as_json(extreme(true)),
    });
    let mut pairs = vec![("points", n_points.to_string())];
    if let Some((t, m)) = extreme(false) {
        pairs.push(("grid min |w|", format!("{} at theta {}", sig12(m), sig12(t))));
    }
    if object == CurveObject::PsiBoundary {
        let refined = circle::min_modulus_on_circle(&f, r)?;
        results["min_modulus"] = to_value(&refined);
        pairs.push((
            "min |psi|",
            format!("{} at theta {}", sig12(refined.value), sig12(refined.theta_star)),
        ));
    }
    if let Some(path) = out {
        write_file(path, &csv)?;
        results["csv"] = Value::from(path.display().to_string());
        inputs.insert("out".into(), Value::from(path.display().to_string()));
        pairs.push(("csv", path.display().to_string()));
    }
    if let Some(path) = svg {
        write_file(path, &svg_polyline(&points))?;
        results["svg"] = Value::from(path.display().to_string());
        inputs.insert("svg".into(), Value::from(path.display().to_string()));
        pairs.push(("svg", path.display().to_string()));
    }
    let human = if out.is_none() && svg.is_none() {
        csv
    } else {
        key_values(&pairs)
    };
    let label = match object {
        CurveObject::PsiBoundary => "image of |z| = r under psi",
        CurveObject::F0Image => "image of |z| = r under the extremal function f0",
    };
    Ok((RunReport::new("curve", inputs, results).provenance(label), human))
}

pub struct VerifyArgs<'a> {
    pub probe: Probe,
    pub eps: f64,
    pub r: Option<f64>,
    pub g: Option<&'a str>,
    pub h: &'a [f64],
    pub samples: usize,
    pub seed: u64,
    pub grid: usize,
    pub order: usize,
}

fn status(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "true",
        Verdict::Fails => "false",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn bool_status(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn verify(class: &ClassArgs, args: VerifyArgs<'_>) -> Output {
    let f = class.build()?;
    let mut inputs = BTreeMap::new();
    class.echo(&mut inputs)?;
    if args.grid < 64 {
        return Err(CliError::Usage(format!("--grid must be at least 64, got {}", args.grid)));
    }
    let (probe, state, mut results, label) = match args.probe {
        Probe::Sharpness => {
            inputs.insert("eps".into(), Value::from(args.eps));
            let r_psi = radius::majorization_radius_starlike(&f)?;
            let rep = verify::majorization_sharpness_probe(&f, r_psi.root, args.eps)?;
            (
                "sharpness",
                bool_status(rep.verdict),
                json!({ "r_psi": r_psi.root, "report": to_value(&rep), "tolerance": 1e-9 }),
                "sharpness of the majorization radius: h(r, alpha) > 1 just outside, <= 1 just inside",
            )
        }
        Probe::BohrCoeff => {
            let r = args.r.unwrap_or(1.0 / 3.0);
            inputs.insert("r".into(), Value::from(r));
            inputs.insert("samples".into(), Value::from(args.samples));
            inputs.insert("seed".into(), Value::from(args.seed));
            let e = synth_f0(&f, args.order)?;
            let square = verify::bohr_coefficient_probe(&e, Schwarz::Power { m: 2 }, r)?;
            let stress = verify::bohr_coefficient_stress(&e, args.samples, r, args.seed)?;
            (
                "bohr-coeff",
                bool_status(square.holds && stress.violations == 0),
                json!({
                    "seed": args.seed,
                    "square": to_value(&square),
                    "stress": to_value(&stress),
                    "tolerance": 1e-12,
                }),
                "coefficient inequality sum |b_k| r^k <= sum |a_n| r^n for g = f0 o omega, r <= 1/3",
            )
        }
        Probe::Bulboaca => {
            if args.h.is_empty() {
                return Err(CliError::Usage("--h coefficients are required for the bulboaca probe".into()));
            }
            inputs.insert("h".into(), to_value(&args.h));
            inputs.insert("grid".into(), Value::from(args.grid));
            let h = HInput::Series(PowerSeries::from_real(args.h));
            let rep = verify::bulboaca_condition_check(&h, &f, args.grid)?;
            (
                "bulboaca",
                status(rep.subordination.verdict),
                json!({
                    "margin": rep.subordination.margin,
                    "report": to_value(&rep),
                    "margin_floor": verify::MARGIN_FLOOR,
                }),
                "sufficient condition (1/z) integral of h subordinate to (psi - 1)/psi",
            )
        }
        Probe::Subordination => {
            let src = args
                .g
                .ok_or_else(|| CliError::Usage("--g is required for the subordination probe".into()))?;
            let g = GExpr::parse(src).map_err(CliError::Usage)?;
            let r = args.r.unwrap_or(0.999);
            inputs.insert("g".into(), Value::from(src));
            inputs.insert("r".into(), Value::from(r));
            inputs.insert("grid".into(), Value::from(args.grid));
            let e = synth_f0(&f, args.order)?;
            let nan = Complex64::new(f64::NAN, f64::NAN);
            let f0 = |z: Complex64| e.eval(z).unwrap_or(nan);
            let rep = verify::is_subordinate_numeric(
                |z| f0(g.inner_at(z)) * g.factor,
                f0,
                r,
                args.grid,
            )?;
            (
                "subordination",
                status(rep.verdict),
                json!({
                    "margin": rep.margin,
                    "report": to_value(&rep),
                    "margin_floor": verify::MARGIN_FLOOR,
                }),
                "subordination g < f0 by polygon containment of g(|z| = r) in f0(|z| = 1)",
            )
        }
    };
    inputs.insert("probe".into(), Value::from(probe));
    results["probe"] = Value::from(probe);
    results["status"] = Value::from(state);
    let mut pairs = vec![("probe", probe.to_string()), ("status", state.to_string())];
    if let Some(m) = results.get("margin").and_then(Value::as_f64) {
        pairs.push(("margin", sig12(m)));
    }
    if let Some(r) = results.get("r_psi").and_then(Value::as_f64) {
        pairs.push(("r_psi", sig12(r)));
    }
    if let Some(stress) = results.get("stress") {
        pairs.push(("seed", args.seed.to_string()));
        pairs.push(("violations", stress["violations"].to_string()));
        pairs.push(("worst ratio", stress["worst_ratio"].as_f64().map(sig12).unwrap_or_default()));
    }
    Ok((RunReport::new("verify", inputs, results).provenance(label), key_values(&pairs)))
}
