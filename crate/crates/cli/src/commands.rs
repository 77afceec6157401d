use std::fmt::Write as _;

use momentcone::polytope::{klyachko_polytope, su22_symbolic_system, AffineMap, Inequality, Polytope};
use momentcone::rootsys::{parse_word, RootSystem, WeylElement};
use momentcone::schubert::{all_horn_triples, dual_triple, horn_table, triple_to_inequality};
use momentcone::spectra::{monte_carlo_check, MonteCarloConfig};
use momentcone::sympair::{kostant_polytope, orbit_closure_polytope, SymmetricPair};
use momentcone::vector::Vector;
use momentcone::{build_root_system, ExactField, Family, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::symbolic::{self, render};
use crate::{Cli, CliError, Command, Format, Report, Weights, GOLDEN_SU22, GOLDEN_HORN4};

type Res<T> = Result<T, CliError>;

pub fn dispatch(cli: &Cli) -> Res<Report> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Rootsys { family, rank } => rootsys(family, *rank, json),
        Command::Pair(p) => pair_info(&p.pair, json),
        Command::Kostant { pair, lambda } => kostant(&pair.pair, lambda, json),
        Command::Horn { n } => horn(*n, json),
        Command::Klyachko { weights, w, figure } => klyachko(weights, w.as_deref(), *figure, json),
        Command::Su22Table => su22_table(json),
        Command::Bruhat { pair, v, w } => bruhat(&pair.pair, v.as_deref(), w, json),
        Command::Sample { weights, trials, seed, tol, aligned_fraction } => {
            let seed = seed.unwrap_or_else(rand::random);
            sample(weights, *trials, seed, *tol, *aligned_fraction, json)
        }
        Command::Check { weights, nu, w } => check(weights, nu, w.as_deref(), json),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn parse_pair(label: &str) -> Res<SymmetricPair<Rational>> {
    Ok(SymmetricPair::parse(label)?)
}

pub fn parse_weight(name: &str, s: &str) -> Res<Vector<Rational>> {
    Vector::parse(s).ok_or_else(|| CliError::usage(format!("--{name}: expected exact fractions like 3/2,1, got {s:?}")))
}

fn parse_element(pair: &SymmetricPair<Rational>, word: &str) -> Res<WeylElement> {
    let w = parse_word(word).ok_or_else(|| CliError::usage(format!("cannot parse Weyl word {word:?}")))?;
    Ok(pair.weyl_element(&w)?)
}

fn word_string(w: &WeylElement) -> String {
    if w.word().is_empty() {
        "e".to_string()
    } else {
        w.word().iter().map(|i| format!("s{i}")).collect()
    }
}

fn strings(vs: &[Vector<Rational>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| v.to_fraction_strings()).collect()
}

fn polytope_text(out: &mut String, p: &Polytope<Rational>) {
    let _ = writeln!(out, "inequalities ({}), a . x <= b as `a | b`:", p.inequalities().len());
    for h in p.inequalities() {
        let _ = writeln!(out, "  {h}");
    }
    if let Some(v) = p.known_vertices() {
        let _ = writeln!(out, "vertices ({}):", v.len());
        for x in v {
            let _ = writeln!(out, "  {x}");
        }
    }
}

fn polytope_json(p: &Polytope<Rational>) -> Value {
    serde_json::to_value(p.to_json()).expect("polytope json")
}

fn root_data(rs: &RootSystem<Rational>) -> Value {
    json!({
        "label": rs.label(),
        "rank": rs.rank(),
        "coordinates": rs.ambient_dim(),
        "positive_roots": strings(rs.positive_roots()),
        "simple_roots": strings(rs.simple_roots()),
        "weyl_order": rs.weyl_order().to_string(),
    })
}

fn root_text(out: &mut String, rs: &RootSystem<Rational>) {
    let _ = writeln!(out, "{} (rank {}, {} coordinates)", rs.label(), rs.rank(), rs.ambient_dim());
    let _ = writeln!(out, "positive roots ({}):", rs.positive_roots().len());
    for r in rs.positive_roots() {
        let _ = writeln!(out, "  {r}");
    }
    let _ = writeln!(out, "simple roots:");
    for (i, r) in rs.simple_roots().iter().enumerate() {
        let _ = writeln!(out, "  alpha_{} = {r}", i + 1);
    }
    let _ = writeln!(out, "weyl order: {}", rs.weyl_order());
}

fn rootsys(family: &str, rank: usize, json: bool) -> Res<Report> {
    let fam: Family = family.parse()?;
    let rs = build_root_system::<Rational>(fam, rank)?;
    if json {
        return Ok(Report::ok(pretty(&root_data(&rs))));
    }
    let mut out = String::new();
    root_text(&mut out, &rs);
    Ok(Report::ok(out))
}

fn pair_info(label: &str, json: bool) -> Res<Report> {
    let p = parse_pair(label)?;
    let weights = p.restricted().fundamental_weights();
    let embedded: Vec<Vector<Rational>> = weights.iter().map(|w| p.embed(w)).collect::<Result<_, _>>()?;
    let model = p.hermitian_model().ok().map(|(n, _)| n);
    if json {
        return Ok(Report::ok(pretty(&json!({
            "pair": p.label().to_string(),
            "ambient": root_data(p.ambient()),
            "restricted": root_data(p.restricted()),
            "a_dim": p.a_dim(),
            "t_dim": p.t_dim(),
            "root_scale": p.root_scale().to_string(),
            "fundamental_weights": strings(&weights),
            "embedded_fundamental_weights": strings(&embedded),
            "horn_model_size": model,
        }))));
    }
    let mut out = String::new();
    let _ = writeln!(out, "pair {}", p.label());
    let _ = writeln!(out, "dim t = {}, dim a = {}, root scale {}", p.t_dim(), p.a_dim(), p.root_scale());
    let _ = writeln!(out, "\nambient: ");
    root_text(&mut out, p.ambient());
    let _ = writeln!(out, "\nrestricted: ");
    root_text(&mut out, p.restricted());
    let _ = writeln!(out, "\nfundamental weights and their embeddings:");
    for (i, (w, e)) in weights.iter().zip(&embedded).enumerate() {
        let _ = writeln!(out, "  pi_{} = {w} -> {e}", i + 1);
    }
    match model {
        Some(n) => {
            let _ = writeln!(out, "horn model: SU({n})");
        }
        None => {
            let _ = writeln!(out, "horn model: none");
        }
    }
    Ok(Report::ok(out))
}

fn kostant(label: &str, lambda: &str, json: bool) -> Res<Report> {
    let p = parse_pair(label)?;
    let l = parse_weight("lambda", lambda)?;
    let poly = kostant_polytope(&p, &l)?;
    if json {
        return Ok(Report::ok(pretty(&json!({
            "pair": p.label().to_string(),
            "lambda": l.to_fraction_strings(),
            "polytope": polytope_json(&poly),
        }))));
    }
    let mut out = format!("kostant polytope of {} at lambda = {l}\n", p.label());
    polytope_text(&mut out, &poly);
    Ok(Report::ok(out))
}

/// The Horn table in the printed layout, one row per line.
pub fn horn_table_text(n: usize) -> String {
    let mut out = String::from("triple | dual triple\n");
    for row in horn_table(n) {
        match &row.dual {
            Some(d) => {
                let _ = writeln!(out, "{} | {d}", row.triple);
            }
            None => {
                let _ = writeln!(out, "{} |", row.triple);
            }
        }
    }
    out
}

fn horn(n: usize, json: bool) -> Res<Report> {
    if n == 0 {
        return Err(CliError::usage("n must be at least 1"));
    }
    let text = horn_table_text(n);
    let breach = (n == 4 && text != GOLDEN_HORN4).then(|| "Horn table for n = 4 differs from the golden copy".to_string());
    let body = if json {
        let rows: Vec<Value> = horn_table(n)
            .iter()
            .map(|r| json!({"triple": r.triple.to_string(), "dual": r.dual.as_ref().map(|d| d.to_string())}))
            .collect();
        pretty(&json!({"n": n, "rows": rows, "golden_match": (n == 4).then_some(breach.is_none())}))
    } else {
        text
    };
    Ok(Report { body, breach })
}

fn klyachko_poly(
    p: &SymmetricPair<Rational>,
    l: &Vector<Rational>,
    m: &Vector<Rational>,
    w: Option<&str>,
) -> Res<Polytope<Rational>> {
    Ok(match w {
        Some(word) => orbit_closure_polytope(p, l, m, &parse_element(p, word)?)?,
        None => klyachko_polytope(p, l, m)?,
    })
}

/// Vertices in plotting order: counterclockwise around the centroid in
/// the plane, sorted otherwise.
pub fn plot_order(vs: &[Vector<Rational>]) -> Vec<Vector<Rational>> {
    let mut out = vs.to_vec();
    if out.first().map(|v| v.dim()) != Some(2) {
        return out;
    }
    let f: Vec<Vec<f64>> = out.iter().map(|v| v.to_f64()).collect();
    let cx = f.iter().map(|v| v[0]).sum::<f64>() / f.len() as f64;
    let cy = f.iter().map(|v| v[1]).sum::<f64>() / f.len() as f64;
    let mut idx: Vec<usize> = (0..out.len()).collect();
    idx.sort_by(|&a, &b| {
        let ta = (f[a][1] - cy).atan2(f[a][0] - cx);
        let tb = (f[b][1] - cy).atan2(f[b][0] - cx);
        ta.total_cmp(&tb)
    });
    out = idx.into_iter().map(|i| vs[i].clone()).collect();
    out
}

fn klyachko(weights: &Weights, w: Option<&str>, figure: bool, json: bool) -> Res<Report> {
    let p = parse_pair(&weights.pair.pair)?;
    let l = parse_weight("lambda", &weights.lambda)?;
    let m = parse_weight("mu", &weights.mu)?;
    let poly = klyachko_poly(&p, &l, &m, w)?;
    let verts = match poly.known_vertices() {
        Some(v) => v.to_vec(),
        None => poly.vertices()?,
    };
    let ordered = plot_order(&verts);
    if figure {
        if json {
            let pts: Vec<Vec<f64>> = ordered.iter().map(|v| v.to_f64()).collect();
            return Ok(Report::ok(pretty(&json!({
                "pair": p.label().to_string(),
                "w": w,
                "vertices": strings(&ordered),
                "coordinates": pts,
            }))));
        }
        let names: Vec<String> = (1..=p.a_dim()).map(|i| format!("x{i}")).collect();
        let mut out = names.join(",") + "\n";
        for v in &ordered {
            let row: Vec<String> = v.to_f64().iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        return Ok(Report::ok(out));
    }
    if json {
        return Ok(Report::ok(pretty(&json!({
            "pair": p.label().to_string(),
            "lambda": l.to_fraction_strings(),
            "mu": m.to_fraction_strings(),
            "w": w,
            "polytope": polytope_json(&poly),
        }))));
    }
    let what = match w {
        Some(word) => format!("orbit closure for w = {word}"),
        None => "full polytope".to_string(),
    };
    let mut out = format!("{} {what}, lambda = {l}, mu = {m}\n", p.label());
    polytope_text(&mut out, &poly.with_vertices(ordered));
    Ok(Report::ok(out))
}

/// `x -> (x1, x2, -x2, -x1)` in each of the three weight groups.
pub fn su22_substitution() -> AffineMap<Rational> {
    let mut rows = Vec::new();
    for block in 0..3 {
        for (src, sign) in [(0, 1), (1, 1), (1, -1), (0, -1)] {
            let mut r = vec![Rational::zero(); 6];
            r[2 * block + src] = Rational::from_int(sign);
            rows.push(Vector::new(r));
        }
    }
    AffineMap::linear(rows, 6).expect("consistent shapes")
}

/// Outcome of the SU(2,2) reduction checked against the golden list.
pub struct Su22Check {
    pub chamber: Vec<Inequality<Rational>>,
    pub system: Vec<Inequality<Rational>>,
    pub missing: Vec<Inequality<Rational>>,
    pub extra: Vec<Inequality<Rational>>,
    /// Triples whose restricted inequality differs from that of the dual.
    pub dual_mismatches: Vec<String>,
}

impl Su22Check {
    pub fn matches(&self) -> bool {
        self.chamber.len() == 6 && self.missing.is_empty() && self.extra.is_empty() && self.dual_mismatches.is_empty()
    }
}

pub fn su22_check() -> Res<Su22Check> {
    let reduced = su22_symbolic_system::<Rational>();
    let chamber_set = symbolic::chamber();
    let (chamber, system): (Vec<_>, Vec<_>) =
        reduced.inequalities().iter().cloned().partition(|h| chamber_set.contains(h));
    let golden = symbolic::parse_system(GOLDEN_SU22).map_err(CliError::breach)?;
    let missing = golden.iter().filter(|h| !system.contains(h)).cloned().collect();
    let extra = system.iter().filter(|h| !golden.contains(h)).cloned().collect();
    let map = su22_substitution();
    let mut dual_mismatches = Vec::new();
    for t in all_horn_triples(4) {
        let a = triple_to_inequality::<Rational>(&t).pull_back(&map);
        let b = triple_to_inequality::<Rational>(&dual_triple(&t)).pull_back(&map);
        if a != b {
            dual_mismatches.push(t.to_string());
        }
    }
    Ok(Su22Check { chamber, system, missing, extra, dual_mismatches })
}

fn su22_table(json: bool) -> Res<Report> {
    let c = su22_check()?;
    let breach = (!c.matches()).then(|| {
        format!(
            "reduced system differs from the golden list: {} missing, {} extra, {} chamber, {} dual mismatches",
            c.missing.len(),
            c.extra.len(),
            c.chamber.len(),
            c.dual_mismatches.len()
        )
    });
    if json {
        let r = |v: &[Inequality<Rational>]| -> Vec<String> { v.iter().map(render).collect() };
        return Ok(Report {
            body: pretty(&json!({
                "variables": symbolic::VARS,
                "chamber": r(&c.chamber),
                "system": r(&c.system),
                "golden_match": c.matches(),
                "missing": r(&c.missing),
                "extra": r(&c.extra),
                "dual_mismatches": c.dual_mismatches,
            })),
            breach,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "chamber ({}):", c.chamber.len());
    for h in &c.chamber {
        let _ = writeln!(out, "  {}", render(h));
    }
    let _ = writeln!(out, "system ({}):", c.system.len());
    for h in &c.system {
        let _ = writeln!(out, "  {}", render(h));
    }
    for h in &c.missing {
        let _ = writeln!(out, "missing from output: {}", render(h));
    }
    for h in &c.extra {
        let _ = writeln!(out, "not in golden list: {}", render(h));
    }
    let _ = writeln!(
        out,
        "triples whose restriction differs from the dual's: {}",
        c.dual_mismatches.len()
    );
    let _ = writeln!(out, "golden list: {}", if c.matches() { "match" } else { "MISMATCH" });
    Ok(Report { body: out, breach })
}

fn bruhat(label: &str, v: Option<&str>, w: &str, json: bool) -> Res<Report> {
    let p = parse_pair(label)?;
    let we = parse_element(&p, w)?;
    match v {
        Some(v) => {
            let ve = parse_element(&p, v)?;
            let leq = p.weyl_group().bruhat_leq(&ve, &we)?;
            if json {
                return Ok(Report::ok(pretty(&json!({
                    "pair": p.label().to_string(),
                    "v": word_string(&ve),
                    "w": word_string(&we),
                    "leq": leq,
                }))));
            }
            Ok(Report::ok(format!("{} <= {}: {leq}\n", word_string(&ve), word_string(&we))))
        }
        None => {
            let mut below = p.weyl_group().lower_interval(&we)?;
            below.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
            let words: Vec<String> = below.iter().map(word_string).collect();
            if json {
                return Ok(Report::ok(pretty(&json!({
                    "pair": p.label().to_string(),
                    "w": word_string(&we),
                    "interval": words,
                }))));
            }
            let mut out = format!("elements below {} ({}):\n", word_string(&we), words.len());
            for s in words {
                let _ = writeln!(out, "  {s}");
            }
            Ok(Report::ok(out))
        }
    }
}

fn sample(weights: &Weights, trials: usize, seed: u64, tol: f64, aligned: f64, json: bool) -> Res<Report> {
    let p = parse_pair(&weights.pair.pair)?;
    let l = parse_weight("lambda", &weights.lambda)?;
    let m = parse_weight("mu", &weights.mu)?;
    let poly = klyachko_polytope(&p, &l, &m)?;
    let cfg = MonteCarloConfig { trials, tol, seed, aligned_fraction: aligned };
    let rep = monte_carlo_check::<f64, _>(&p, &l, &m, &poly, &cfg)?;
    let breach = (!rep.is_clean()).then(|| {
        format!(
            "{} polytope violations, {} Weyl violations, {} residual failures in {} trials",
            rep.violation_count, rep.weyl_violations, rep.residual_failures, rep.trials
        )
    });
    if json {
        let mut v = serde_json::to_value(&rep).expect("report json");
        v["polytope"] = polytope_json(&poly);
        return Ok(Report { body: pretty(&v), breach });
    }
    let mut out = String::new();
    let _ = writeln!(out, "seed: {seed}");
    let _ = writeln!(out, "pair: {}, lambda = {l}, mu = {m}", p.label());
    let _ = writeln!(out, "trials: {} ({} aligned)", rep.trials, rep.aligned_trials);
    let _ = writeln!(out, "membership tol: {:e}, decomposition tol: {:e}", rep.tol, rep.decomposition_tol);
    let _ = writeln!(out, "max decomposition residual: {:e}", rep.max_residual);
    let _ = writeln!(out, "residual failures: {}", rep.residual_failures);
    let _ = writeln!(out, "weyl violations: {}", rep.weyl_violations);
    let _ = writeln!(out, "violations: {}", rep.violation_count);
    for v in rep.violations.iter().take(10) {
        let _ = writeln!(out, "  trial {}: {:?} breaks `{}` by {:e}", v.trial, v.sample, v.inequality, v.margin);
    }
    let _ = writeln!(out, "closest approach to vertices:");
    for (name, d) in &rep.vertex_coverage {
        let _ = writeln!(out, "  {name}: {d:e}");
    }
    Ok(Report { body: out, breach })
}

fn check(weights: &Weights, nu: &str, w: Option<&str>, json: bool) -> Res<Report> {
    let p = parse_pair(&weights.pair.pair)?;
    let l = parse_weight("lambda", &weights.lambda)?;
    let m = parse_weight("mu", &weights.mu)?;
    let n = parse_weight("nu", nu)?;
    let poly = klyachko_poly(&p, &l, &m, w)?;
    let member = poly.membership(&n)?;
    let tight: Vec<String> = poly.tight_at(&n)?.into_iter().map(|i| poly.inequalities()[i].to_string()).collect();
    let slack: Option<Rational> = poly
        .inequalities()
        .iter()
        .map(|h| -h.slack(&n))
        .min();
    if json {
        return Ok(Report::ok(pretty(&json!({
            "pair": p.label().to_string(),
            "nu": n.to_fraction_strings(),
            "w": w,
            "member": member,
            "tight": tight,
            "min_margin": slack.map(|s| s.to_string()),
        }))));
    }
    let mut out = format!("nu = {n} in polytope: {member}\n");
    if let Some(s) = slack {
        let _ = writeln!(out, "smallest margin b - a . nu: {s}");
    }
    let _ = writeln!(out, "tight inequalities ({}):", tight.len());
    for t in tight {
        let _ = writeln!(out, "  {t}");
    }
    Ok(Report::ok(out))
}
