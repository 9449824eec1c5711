//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use nc_cayley::charpoly::decompose_thm22;
use nc_cayley::ideal::certify_sandwich_residual;
use nc_cayley::matrix::Matrix;
use nc_cayley::oracle::commutative_oracle;
use nc_cayley::random::{
    default_generators, generic_matrix, generic_matrix_in, random_element, random_matrix,
    random_permutation_matrix, random_unimodular, rng, RandomParams,
};
use nc_cayley::ring::RingElement;
use nc_cayley::verify::{
    check_bijection, sandwich_product_identity_with, verify_invariance, verify_prop21,
    verify_thm22, verify_thm31, VerificationReport,
};
use nc_cayley::{Element, Rational, Ring, RingDescriptor, RingKind};

type M = Matrix<Element>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring_of(kind: RingKind) -> RingDescriptor {
    RingDescriptor::of_kind(kind, default_generators(kind))
}

fn random(ring: &RingDescriptor, n: usize, seed: u64) -> M {
    random_matrix(ring, n, &mut rng(seed), &RandomParams::default())
}

/// Collects failures; `Ok` carries a one-line summary.
struct Outcome {
    failures: Vec<String>,
    runs: usize,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new(), runs: 0 }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.runs += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, report: &VerificationReport<Rational>, what: impl FnOnce() -> String) {
        let ok = report.holds();
        self.expect(ok, || {
            let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            format!("{} ({}; failed checks {:?})", what(), report.verdict, failed)
        });
    }
}

fn trace_symmetry() -> Outcome {
    let mut out = Outcome::new();
    for n in [2, 3] {
        out.report(&verify_prop21(&generic_matrix(n)), || format!("generic n={n}"));
    }
    for kind in [RingKind::Grassmann, RingKind::UpperTriangular2] {
        let ring = ring_of(kind);
        for n in [2, 3] {
            for t in 0..100 {
                let a = random(&ring, n, 1000 * n as u64 + t);
                out.report(&verify_prop21(&a), || format!("{ring} n={n} trial {t}"));
            }
        }
    }
    out
}

fn bijection() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=4 {
        let s = check_bijection(n);
        out.expect(s.is_bijection(), || format!("n={n}: theta/delta not mutually inverse on S_n*"));
        out.expect(s.theta_endpoint_failures.is_empty(), || {
            let list: Vec<_> = s.theta_endpoint_failures.iter().map(|p| p.to_string()).collect();
            format!("n={n}: theta(tau,s)(n) != s for {}", list.join(" "))
        });
        out.expect(s.delta_endpoint_failures.is_empty(), || {
            let list: Vec<_> = s.delta_endpoint_failures.iter().map(|p| p.to_string()).collect();
            format!("n={n}: delta(alpha,p)(1) != p for {}", list.join(" "))
        });
    }
    for n in 1..=3 {
        let report = verify_prop21(&generic_matrix::<Rational>(n));
        let check = report.check("term-correspondence").unwrap();
        out.expect(check.passed, || format!("n={n}: term correspondence: {}", check.detail));
    }
    out
}

fn cayley_hamilton() -> Outcome {
    let mut out = Outcome::new();
    out.report(&verify_thm22(&generic_matrix(2)), || "generic n=2".into());
    for kind in RingKind::ALL {
        let ring = ring_of(kind);
        for n in [2, 3] {
            for t in 0..100 {
                let a = random(&ring, n, 2000 * n as u64 + t);
                out.report(&verify_thm22(&a), || format!("{ring} n={n} trial {t}"));
            }
        }
    }
    out
}

fn sandwich() -> Outcome {
    let mut out = Outcome::new();
    let u2 = RingDescriptor::upper_triangular();
    for (n, trials) in [(2, 200), (3, 50)] {
        for t in 0..trials {
            let a = random(&u2, n, 3000 * n as u64 + t);
            out.report(&verify_thm31(&a), || format!("{u2} n={n} trial {t}"));
        }
    }
    let comm = ring_of(RingKind::CommutativePoly);
    for n in 1..=3 {
        for t in 0..100 {
            let a = random(&comm, n, 3500 * n as u64 + t);
            out.report(&verify_thm31(&a), || format!("{comm} n={n} trial {t}"));
        }
    }
    out
}

fn certification() -> Outcome {
    let mut out = Outcome::new();
    let a: M = generic_matrix(2);
    let certs = certify_sandwich_residual(&a).expect("free algebra input");
    for c in &certs {
        let reproduced = c
            .membership
            .certificate
            .as_ref()
            .is_some_and(|cert| cert.expand(a.ring()) == c.component);
        out.expect(c.membership.member && reproduced, || {
            format!("entry ({},{}) component of degree {:?} not certified", c.row, c.col, c.component.degree())
        });
    }
    out.expect(!certs.is_empty(), || "residual has no components".into());
    out
}

fn oracle() -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=4 {
        let summary = commutative_oracle::<Rational>(n, 100, 6000 + n as u64, 5);
        out.expect(summary.passed(), || format!("n={n}: {:?}", summary.failures));
    }
    out
}

fn invariance() -> Outcome {
    let mut out = Outcome::new();
    for kind in RingKind::ALL {
        let ring = ring_of(kind);
        for n in 1..=3 {
            for unimodular in [false, true] {
                let mut g = rng(7000 + 10 * n as u64 + unimodular as u64 + 100 * kind as u64);
                for t in 0..50 {
                    let a = random_matrix(&ring, n, &mut g, &RandomParams::default());
                    let conj = if unimodular {
                        random_unimodular(&ring, n, &mut g)
                    } else {
                        random_permutation_matrix(&ring, n, &mut g)
                    };
                    let label = if unimodular { "unimodular" } else { "permutation" };
                    match verify_invariance(&a, &conj) {
                        Ok(r) => out.report(&r, || format!("{ring} n={n} {label} trial {t}")),
                        Err(e) => out.expect(false, || format!("{ring} n={n} {label} trial {t}: {e}")),
                    }
                }
            }
        }
    }
    out
}

fn pivot() -> Outcome {
    let mut out = Outcome::new();
    for kind in RingKind::ALL {
        if kind.has_generators() {
            let ring = RingDescriptor::of_kind(kind, 4);
            let a = generic_matrix_in(&ring, 2);
            out.report(&sandwich_product_identity_with(&a, &decompose_thm22(&a)), || format!("{ring} generic n=2"));
        }
        let ring = ring_of(kind);
        for n in 1..=3 {
            for t in 0..10 {
                let a = random(&ring, n, 8000 * n as u64 + t);
                out.report(&sandwich_product_identity_with(&a, &decompose_thm22(&a)), || {
                    format!("{ring} n={n} trial {t}")
                });
            }
        }
    }
    out
}

fn ring_identities() -> Outcome {
    let mut out = Outcome::new();
    let params = RandomParams::default();
    let u2 = RingDescriptor::upper_triangular();
    let mut g = rng(9000);
    for t in 0..1000 {
        let [a, b, c, d]: [Element; 4] = std::array::from_fn(|_| random_element(&u2, &mut g, &params));
        out.expect(a.commutator(&b).mul_ref(&c.commutator(&d)).is_zero(), || format!("U2 quadruple {t}"));
    }
    let e4 = RingDescriptor::grassmann(4);
    let v: Vec<Element> = (1..=4).map(|i| RingElement::generator(&e4, i).unwrap()).collect();
    let witness = v[0].commutator(&v[1]).mul_ref(&v[2].commutator(&v[3]));
    let top = v[0].mul_ref(&v[1]).mul_ref(&v[2]).mul_ref(&v[3]).scale_int(4);
    out.expect(witness == top && !witness.is_zero(), || format!("[v1,v2][v3,v4] = {witness}"));
    for t in 0..1000 {
        let [a, b, c]: [Element; 3] = std::array::from_fn(|_| random_element(&e4, &mut g, &params));
        out.expect(a.commutator(&b).commutator(&c).is_zero(), || format!("Grassmann triple {t}"));
    }
    out
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 trace symmetry tr(A*A) = tr(AA*)", trace_symmetry),
        ("2 theta/delta bijection, endpoints and term correspondence", bijection),
        ("3 left/right Cayley-Hamilton identities", cayley_hamilton),
        ("4 sandwich identity over U2 and commutative rings", sandwich),
        ("5 generic n=2 certification in the T-ideal of [x,y][u,v]", certification),
        ("6 commutative cofactor oracle", oracle),
        ("7 invariance under conjugation", invariance),
        ("8 sandwich = sum A^i C_i D_j A^j on every ring", pivot),
        ("9 ring identity sanity", ring_identities),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        if out.failures.is_empty() {
            println!("criterion {name}: PASS ({} checks, {secs:.1}s)", out.runs);
        } else {
            failed += 1;
            println!(
                "criterion {name}: FAIL ({} of {} checks failed, {secs:.1}s)",
                out.failures.len(),
                out.runs
            );
            for f in &out.failures {
                println!("    {f}");
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
