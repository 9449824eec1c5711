//! Text and JSON rendering. Output depends only on the inputs (wall time is
//! shown only with `--timing`).

use nc_cayley::charpoly::CharPolyResult;
use nc_cayley::ideal::{Certificate, ComponentCertification, IdealMembershipInstance, Membership};
use nc_cayley::job::{rows_as_text, RingSpec};
use nc_cayley::oracle::OracleSummary;
use nc_cayley::verify::{Residual, VerificationReport};
use nc_cayley::{Element, Matrix, Rational};
use serde_json::{json, Value};

pub struct Out {
    json: bool,
    timing: bool,
}

fn subscript(i: usize) -> String {
    i.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

fn header(a: &Matrix) -> String {
    format!("ring: {}\nn: {}", a.ring(), a.n())
}

fn header_json(a: &Matrix) -> Value {
    json!({ "ring": RingSpec::from(a.ring()), "n": a.n() })
}

fn with(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn residual_json(r: &Residual<Rational>) -> Value {
    match r {
        Residual::Element(e) => json!(e.to_string()),
        Residual::Matrix(m) => json!(rows_as_text(m)),
        Residual::Parts(parts) => Value::Object(parts.iter().map(|(k, v)| (k.clone(), residual_json(v))).collect()),
    }
}

fn certificate_json(c: &Certificate<Rational>, prefix: &str) -> Value {
    c.terms
        .iter()
        .map(|(coeff, g)| json!({ "coefficient": coeff.to_string(), "generator": g.display(prefix) }))
        .collect()
}

impl Out {
    pub fn new(json: bool, timing: bool) -> Self {
        Self { json, timing }
    }

    fn emit(&self, value: Value) {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    }

    pub fn charpoly(&self, a: &Matrix, lambda: &[Element]) {
        if self.json {
            let lambda: Vec<_> = lambda.iter().map(|l| l.to_string()).collect();
            return self.emit(with(header_json(a), json!({ "lambda": lambda })));
        }
        println!("{}", header(a));
        for (i, l) in lambda.iter().enumerate() {
            println!("λ{} = {l}", subscript(i));
        }
    }

    pub fn preadjoint(&self, a: &Matrix, star: &Matrix, sdet: &Element) {
        if self.json {
            let extra = json!({ "preadjoint": rows_as_text(star), "sdet": sdet.to_string() });
            return self.emit(with(header_json(a), extra));
        }
        println!("{}\npreadjoint:\n{star}\nsdet = {sdet}", header(a));
    }

    pub fn decomposition(&self, a: &Matrix, dec: &CharPolyResult<Element>) {
        if self.json {
            let terms: Vec<_> = (0..=a.n())
                .map(|i| {
                    json!({
                        "lambda": dec.lambda[i].to_string(),
                        "c": rows_as_text(&dec.c[i]),
                        "d": rows_as_text(&dec.d[i]),
                    })
                })
                .collect();
            return self.emit(with(header_json(a), json!({ "coefficients": terms })));
        }
        println!("{}", header(a));
        for i in 0..=a.n() {
            let k = subscript(i);
            println!("λ{k} = {}\nC{k}:\n{}\nD{k}:\n{}", dec.lambda[i], dec.c[i], dec.d[i]);
        }
    }

    pub fn report(&self, r: &VerificationReport<Rational>) {
        if self.json {
            let checks: Vec<_> = r
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let mut stats: serde_json::Map<String, Value> =
                r.stats.counts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            stats.insert("max_degree".into(), json!(r.stats.max_degree));
            if self.timing {
                stats.insert("elapsed_ms".into(), json!(r.stats.elapsed.as_secs_f64() * 1e3));
            }
            return self.emit(json!({
                "claim": r.claim.name(),
                "verdict": r.verdict.to_string(),
                "residual": r.residual.as_ref().map(residual_json),
                "checks": checks,
                "stats": stats,
            }));
        }
        println!("claim: {}\nverdict: {}", r.claim, r.verdict);
        if let Some(res) = &r.residual {
            if res.is_zero() {
                println!("residual: zero");
            } else {
                println!("residual:\n{res}");
            }
        }
        for c in &r.checks {
            println!("check {}: {} ({})", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail);
        }
        for (k, v) in &r.stats.counts {
            println!("{k}: {v}");
        }
        if let Some(d) = r.stats.max_degree {
            println!("max_degree: {d}");
        }
        if self.timing {
            println!("elapsed: {:.3} ms", r.stats.elapsed.as_secs_f64() * 1e3);
        }
    }

    pub fn certification(&self, a: &Matrix, certs: &[ComponentCertification<Rational>]) {
        let prefix = a.ring().generator_prefix();
        let certified = certs.iter().filter(|c| c.membership.member).count();
        if self.json {
            let comps: Vec<_> = certs
                .iter()
                .map(|c| {
                    json!({
                        "row": c.row + 1,
                        "col": c.col + 1,
                        "component": c.component.to_string(),
                        "member": c.membership.member,
                        "certificate": c.membership.certificate.as_ref().map(|k| certificate_json(k, prefix)),
                    })
                })
                .collect();
            let extra = json!({ "components": comps, "certified": certified, "total": certs.len() });
            return self.emit(with(header_json(a), extra));
        }
        println!("{}", header(a));
        for c in certs {
            println!(
                "entry ({},{}) degree {}: {}",
                c.row + 1,
                c.col + 1,
                c.component.degree().unwrap_or(0),
                c.membership
            );
        }
        println!("certified {certified} of {} components", certs.len());
    }

    pub fn membership(&self, inst: &IdealMembershipInstance<Rational>, m: &Membership<Rational>) {
        let prefix = inst.target().ring().generator_prefix();
        if self.json {
            return self.emit(json!({
                "target": inst.target().to_string(),
                "degree": inst.degree(),
                "member": m.member,
                "certificate": m.certificate.as_ref().map(|c| certificate_json(c, prefix)),
                "spanning_elements": m.spanning_elements,
                "rank": m.rank,
            }));
        }
        println!("target: {}\ndegree: {}\n{m}", inst.target(), inst.degree());
        if let Some(c) = &m.certificate {
            for (coeff, g) in &c.terms {
                println!("  {coeff} * {}", g.display(prefix));
            }
        }
        println!("spanning elements: {}\nrank: {}", m.spanning_elements, m.rank);
    }

    pub fn oracle(&self, n: usize, seed: u64, s: &OracleSummary) {
        if self.json {
            let failures: Vec<_> = s
                .failures
                .iter()
                .map(|f| json!({ "trial": f.trial, "what": f.what }))
                .collect();
            return self.emit(json!({
                "n": n, "seed": seed, "trials": s.trials, "passed": s.passed(), "failures": failures,
            }));
        }
        println!(
            "commutative oracle n={n} seed={seed}: {} trials, {}",
            s.trials,
            if s.passed() { "all agree" } else { "MISMATCH" }
        );
        for f in &s.failures {
            println!("  trial {}: {}", f.trial, f.what);
        }
    }
}
