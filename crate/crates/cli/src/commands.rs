//! One function per subcommand. Each returns its JSON result and exit code.

use serde_json::{json, Value};

use umrow::mennicke::{mennicke, mennicke_equal};
use umrow::orbit::{orbit_bfs, same_orbit, Generators, Mode, OrbitConfig};
use umrow::polyext::{jacobson_radical, jacobson_reduce, specialization_check, PolyRow};
use umrow::relative::relative_transitivity;
use umrow::ring::{lift_row, ExcisionMap};
use umrow::row::{e1, um_rel_member};
use umrow::symplectic::compare_e_esp_orbits;
use umrow::vdk::{build_group_table, nice_check, stable_range, ProductRow};
use umrow::word::Certificate;
use umrow::{Elem, Error, Ideal, Ring};

use crate::cache::Cache;
use crate::output::{Failure, Report, EXIT_NEGATIVE};
use crate::{Budget, CacheAction, Command, GeneratorArgs, ModeArg};

type Outcome = Result<Report, Failure>;

/// Largest excision ring whose structure maps are checked on all pairs.
const EXHAUSTIVE_DEMO_LIMIT: usize = 1024;

pub fn run(cmd: &Command, budget: &Budget, cache: &Cache) -> Outcome {
    match cmd {
        Command::Um { ring, row, ideal } => um(ring, row, ideal.as_deref()),
        Command::Orbit { ring, row, mode, ideal, generators, target } => {
            orbit(ring, row, *mode, ideal.as_deref(), generators, target.as_deref(), budget)
        }
        Command::Table { ring, n, no_cache } => table(ring, *n, (!no_cache).then_some(cache), budget),
        Command::Nice { ring, v, w } => nice(ring, v, w, budget),
        Command::Mennicke { ring, a, b, versus } => mennicke_cmd(ring, a, b, versus, budget),
        Command::SympCompare { ring, m, row, generators } => symp_compare(ring, *m, row.as_deref(), generators),
        Command::Sr { ring } => sr(ring),
        Command::ExcisionDemo { ring, ideal, row } => excision_demo(ring, ideal, row.as_deref()),
        Command::RelTrans { ring, ideal, row } => rel_trans(ring, ideal, row, budget),
        Command::Jacobson { ring, row } => jacobson(ring, row.as_deref(), budget),
        Command::PolyNice { ring, v, w, degree } => poly_nice(ring, v, w, *degree, budget),
        Command::VerifyCert { file } => verify_cert(file),
        Command::Cache { action } => cache_cmd(*action, cache),
    }
}

fn parse_ring(text: &str) -> Result<Ring, Failure> {
    Ok(Ring::parse_descriptor(text)?)
}

fn parse_ideal(ring: &Ring, gens: &str) -> Result<Ideal, Failure> {
    Ok(Ideal::new(ring, ring.parse_row(gens)?))
}

fn config(budget: &Budget, mode: Mode, generators: Generators) -> OrbitConfig {
    OrbitConfig { mode, generators, node_cap: budget.node_cap, conj_depth: budget.conj_depth }
}

fn generators(ring: &Ring, args: &GeneratorArgs) -> Result<Generators, Failure> {
    Ok(match (&args.params, args.no_generators) {
        (_, true) => Generators::Empty,
        (Some(list), false) => Generators::Restricted(ring.parse_row(list)?),
        (None, false) => Generators::Full,
    })
}

fn json_row(ring: &Ring, row: &[Elem]) -> Value {
    Value::Array(row.iter().map(|x| ring.to_json(x)).collect())
}

fn product_json(ring: &Ring, p: &ProductRow) -> Value {
    json!({"row": json_row(ring, &p.row), "witness": json_row(ring, &p.witness), "w1": ring.to_json(&p.w1)})
}

fn um(ring: &str, row: &str, ideal: Option<&str>) -> Outcome {
    let ring = parse_ring(ring)?;
    let v = ring.parse_row(row)?;
    let witness = ring.solve_unimodular(&v)?;
    let mut out = json!({
        "ring": ring.descriptor().to_json(),
        "row": json_row(&ring, &v),
        "unimodular": witness.is_some(),
        "witness": witness.as_ref().map(|w| json_row(&ring, w)),
    });
    let mut positive = witness.is_some();
    if let Some(gens) = ideal {
        let ideal = parse_ideal(&ring, gens)?;
        let rel = um_rel_member(&ring, &v, &ideal)?;
        out["relative"] = json!({"ideal": ring.format_row(ideal.generators()), "member": rel});
        positive &= rel;
    }
    Ok(Report { result: out, exit: if positive { 0 } else { EXIT_NEGATIVE } })
}

fn orbit(
    ring: &str,
    row: &str,
    mode: ModeArg,
    ideal: Option<&str>,
    gens: &GeneratorArgs,
    target: Option<&str>,
    budget: &Budget,
) -> Outcome {
    let ring = parse_ring(ring)?;
    let v = ring.parse_row(row)?;
    let relative = |f: fn(Ideal) -> Mode| -> Result<Mode, Failure> {
        let gens = ideal.ok_or_else(|| Failure::usage("relative modes need --ideal"))?;
        Ok(f(parse_ideal(&ring, gens)?))
    };
    let mode = match mode {
        ModeArg::E => Mode::E,
        ModeArg::Esp => Mode::ESp,
        ModeArg::ERel => relative(Mode::ERel)?,
        ModeArg::EspRel => relative(Mode::ESpRel)?,
    };
    let cfg = config(budget, mode, generators(&ring, gens)?);
    match target {
        None => Ok(Report::ok(orbit_bfs(&ring, &v, &cfg)?.to_json())),
        Some(t) => {
            let w = ring.parse_row(t)?;
            let verdict = same_orbit(&ring, &v, &w, &cfg)?;
            let mut out = verdict.to_json();
            out["mode"] = json!(cfg.mode.name());
            out["row"] = json_row(&ring, &v);
            out["target"] = json_row(&ring, &w);
            Ok(Report::verdict(out, verdict.verdict()))
        }
    }
}

fn table(ring: &str, n: usize, cache: Option<&Cache>, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    if n < 3 {
        return Err(Failure::usage("orbit tables need n >= 3"));
    }
    if let Some(cache) = cache {
        if let Some(t) = cache.load(ring.descriptor(), n)? {
            eprintln!("umrow table: cache hit in {}", cache.dir().display());
            return Ok(Report::ok(t.to_json()));
        }
    }
    let t = build_group_table(&ring, n, &config(budget, Mode::E, Generators::Full))?;
    if let Some(cache) = cache {
        let key = cache.store(ring.descriptor(), n, &t)?;
        eprintln!("umrow table: stored {key} in {}", cache.dir().display());
    }
    Ok(Report::ok(t.to_json()))
}

fn nice(ring: &str, v: &str, w: &str, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    let (v, w) = (ring.parse_row(v)?, ring.parse_row(w)?);
    let r = nice_check(&ring, &v, &w, &config(budget, Mode::E, Generators::Full))?;
    Ok(Report::verdict(r.to_json(&ring), r.verdict.name()))
}

fn pair(ring: &Ring, text: &str) -> Result<(Elem, Elem), Failure> {
    let mut xs = ring.parse_row(text)?;
    if xs.len() != 2 {
        return Err(Failure::usage(format!("expected two elements, got {text:?}")));
    }
    let b = xs.pop().expect("two elements");
    Ok((xs.pop().expect("two elements"), b))
}

fn mennicke_cmd(ring: &str, a: &str, b: &str, versus: &str, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    let m1 = mennicke(&ring, &ring.parse(a)?, &ring.parse(b)?)?;
    let (c, d) = pair(&ring, versus)?;
    let m2 = mennicke(&ring, &c, &d)?;
    let eq = mennicke_equal(&m1, &m2, budget.group_cap)?;
    let out = eq.to_json();
    let verdict = out["verdict"].as_str().unwrap_or("unknown").to_string();
    let result = json!({"symbol": m1.to_json(), "versus": m2.to_json(), "equal": out});
    Ok(Report::verdict(result, &verdict))
}

fn symp_compare(ring: &str, m: usize, row: Option<&str>, gens: &GeneratorArgs) -> Outcome {
    let ring = parse_ring(ring)?;
    let v = match row {
        Some(r) => ring.parse_row(r)?,
        None => e1(&ring, 2 * m),
    };
    let c = compare_e_esp_orbits(&ring, m, &v, &generators(&ring, gens)?)?;
    let mut out = c.to_json();
    out["row"] = json_row(&ring, &v);
    out["m"] = json!(m);
    Ok(Report::verdict(out, if c.equal { "equal" } else { "differ" }))
}

fn sr(ring: &str) -> Outcome {
    let ring = parse_ring(ring)?;
    let mut reports = Vec::new();
    for n in 1..=6 {
        let r = stable_range(&ring, n)?;
        reports.push(json!({
            "n": n,
            "holds": r.holds,
            "failures": r.failures.iter().map(|f| ring.format_row(f)).collect::<Vec<_>>(),
        }));
        if r.holds {
            return Ok(Report::ok(json!({
                "ring": ring.descriptor().to_json(),
                "sr": n,
                "sdim": n - 1,
                "checks": reports,
            })));
        }
    }
    Err(Error::HypothesisFailed("stable range exceeds 6".into()).into())
}

fn excision_demo(ring: &str, ideal: &str, row: Option<&str>) -> Outcome {
    let base = parse_ring(ring)?;
    let gens = base.parse_row(ideal)?;
    let ex = Ring::excision(&base, &gens)?;
    let mut out = json!({
        "base": base.descriptor().to_json(),
        "ideal": base.format_row(&gens),
        "excision_ring": ex.descriptor().to_json(),
    });
    if ex.is_finite() {
        let els = ex.elements()?;
        out["size"] = json!(els.len());
        if els.len() <= EXHAUSTIVE_DEMO_LIMIT {
            let omega = |x: &Elem| ExcisionMap::Omega.apply(&ex, x);
            let pi = |x: &Elem| ExcisionMap::Pi.apply(&ex, x);
            let mut hom = base.is_one(&omega(&ex.one())?);
            for x in els {
                for y in els {
                    hom &= omega(&ex.mul(x, y))? == base.mul(&omega(x)?, &omega(y)?)
                        && omega(&ex.add(x, y))? == base.add(&omega(x)?, &omega(y)?);
                }
            }
            let mut section = true;
            for r in base.elements()? {
                section &= omega(&ExcisionMap::Gamma.apply(&ex, r)?)? == *r;
            }
            let members = Ideal::new(&base, gens.clone()).members()?;
            let mut kernel = 0;
            let mut kernel_ok = true;
            for x in els {
                if base.is_zero(&pi(x)?) {
                    kernel += 1;
                    kernel_ok &= members.contains(&omega(x)?);
                }
            }
            kernel_ok &= kernel == members.len();
            out["checks"] = json!({
                "exhaustive": true,
                "omega_homomorphism": hom,
                "omega_gamma_identity": section,
                "pi_kernel_is_ideal": kernel_ok,
            });
        } else {
            out["checks"] = json!({"exhaustive": false});
        }
    }
    if let Some(r) = row {
        let v = base.parse_row(r)?;
        let lifted = lift_row(&ex, &v)?;
        out["lift"] = json!({
            "row": json_row(&base, &v),
            "lifted": ex.format_row(&lifted),
            "omega": json_row(&base, &ExcisionMap::Omega.apply_all(&ex, &lifted)?),
            "pi": json_row(&base, &ExcisionMap::Pi.apply_all(&ex, &lifted)?),
        });
    }
    let ok = ["omega_homomorphism", "omega_gamma_identity", "pi_kernel_is_ideal"]
        .iter()
        .all(|k| out["checks"][k].as_bool().unwrap_or(true));
    Ok(Report { result: out, exit: if ok { 0 } else { EXIT_NEGATIVE } })
}

fn rel_trans(ring: &str, ideal: &str, row: &str, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let v = ring.parse_row(row)?;
    let r = relative_transitivity(&ring, &v, &ideal, &config(budget, Mode::E, Generators::Full))?;
    let mut out = r.to_json();
    out["row"] = json_row(&ring, &v);
    out["ideal"] = json!(ring.format_row(ideal.generators()));
    out["reaches"] = json_row(&ring, &r.word.act(&v)?);
    out["relative"] = json!(r.word.is_relative_to(&ideal)?);
    Ok(Report::ok(out))
}

fn jacobson(ring: &str, row: Option<&str>, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    let radical = jacobson_radical(&ring)?;
    let mut out = json!({
        "ring": ring.descriptor().to_json(),
        "radical": ring.format_row(radical.generators()),
        "radical_size": radical.members()?.len(),
    });
    if let Some(r) = row {
        let v = ring.parse_row(r)?;
        let red = jacobson_reduce(&ring, &v, &config(budget, Mode::E, Generators::Full))?;
        out["row"] = json_row(&ring, &v);
        out["reduction"] = red.to_json();
    }
    Ok(Report::ok(out))
}

fn poly_nice(ring: &str, v: &str, w: &str, degree: Option<usize>, budget: &Budget) -> Outcome {
    let ring = parse_ring(ring)?;
    if ring.base().is_none() || !ring.is_poly_ext() {
        return Err(Failure::usage(format!("{ring} is not a polynomial extension R[X]")));
    }
    let (v, w) = (PolyRow::parse(&ring, v)?, PolyRow::parse(&ring, w)?);
    let bound = degree.unwrap_or_else(|| v.default_bound().max(w.default_bound()));
    let s = specialization_check(&v, &w, bound, &config(budget, Mode::E, Generators::Full))?;
    let base = v.base();
    let mut same = s.verdict.to_json();
    same["mode"] = json!("E");
    let out = json!({
        "ring": ring.descriptor().to_json(),
        "degree_bound": bound,
        "v": v.to_json(),
        "w": w.to_json(),
        "product": product_json(&ring, &s.poly_product),
        "evaluated": json_row(base, &s.evaluated),
        "base_product": product_json(base, &s.base_product),
        "same_orbit": same,
    });
    Ok(Report::verdict(out, s.verdict.verdict()))
}

fn verify_cert(file: &std::path::Path) -> Outcome {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::io(file, e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
    let cert = Certificate::from_json(&v)?;
    let ring = &cert.word.ring;
    let mut out = json!({
        "ring": ring.descriptor().to_json(),
        "n": cert.word.n,
        "letters": cert.word.len(),
        "source": json_row(ring, &cert.source),
        "target": json_row(ring, &cert.target),
    });
    match cert.verify() {
        Ok(()) => {
            out["valid"] = json!(true);
            Ok(Report::ok(out))
        }
        Err(Error::CertificateInvalid(reason)) => {
            out["valid"] = json!(false);
            out["reason"] = json!(reason);
            Ok(Report { result: out, exit: EXIT_NEGATIVE })
        }
        Err(e) => Err(e.into()),
    }
}

fn cache_cmd(action: CacheAction, cache: &Cache) -> Outcome {
    Ok(Report::ok(match action {
        CacheAction::List => cache.list()?,
        CacheAction::Clear => json!({"removed": cache.clear()?}),
        CacheAction::Path => json!({"path": cache.dir().display().to_string()}),
    }))
}
