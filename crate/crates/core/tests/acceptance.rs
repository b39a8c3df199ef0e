//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness; the process exits nonzero when any criterion fails.

use std::process::ExitCode;

use nalgebra::Matrix2;
use qbound::bench::{self, BenchConfig, DegreeRange};
use qbound::bounds::{
    cauchy_lower, cauchy_upper, fujiwara, names, opfer, theorem1, theorem2, theorem2_opt, theorem3,
    theorem3_opt, OpferVariant, Theorem3Parts,
};
use qbound::oracle::{root_moduli, verify_spectrum};
use qbound::selector::{classify, select, ProfileTag, SelectOptions};
use qbound::{
    all_bounds, block_bound, random_poly, AuxPolynomial, BoundInput, BoundKind, BoundOptions,
    Bracket, CompanionKind, GershgorinVariant, NormKind, QMatrix, QPolynomial, Quaternion, Side,
    Theorem3Variant, WeightVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Collects failed sub-checks so a criterion reports every problem at once.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self, summary: impl Into<String>) -> Outcome {
        if self.0.is_empty() {
            outcome(true, summary)
        } else {
            let n = self.0.len();
            let shown: Vec<String> = self.0.into_iter().take(5).collect();
            outcome(false, format!("{n} failed: {}", shown.join("; ")))
        }
    }
}

fn rand_q(rng: &mut ChaCha8Rng, half: f64) -> Quaternion {
    Quaternion::new(
        rng.random_range(-half..=half),
        rng.random_range(-half..=half),
        rng.random_range(-half..=half),
        rng.random_range(-half..=half),
    )
}

fn heavy_const_poly() -> QPolynomial {
    QPolynomial::monic(
        Side::Left,
        &[8.0 * Quaternion::K, Quaternion::J, Quaternion::ZERO],
    )
    .unwrap()
}

fn criterion_1() -> Outcome {
    let m = [8.0, 1.0, 0.0];
    let mut c = Checks::default();
    let cu = cauchy_upper(&m).unwrap().value;
    c.check(cu == 9.0, || format!("cauchy_upper {cu}"));
    let om = opfer(&m, OpferVariant::Max).unwrap().value;
    c.check(om == 8.0, || format!("opfer_max {om}"));
    let os = opfer(&m, OpferVariant::Sum).unwrap().value;
    c.check(os == 9.0, || format!("opfer_sum {os}"));
    let fj = fujiwara(&m).unwrap().value;
    c.check((fj - 3.1748).abs() <= 5e-4, || format!("fujiwara {fj}"));
    let t1 = theorem1(&heavy_const_poly()).unwrap().value;
    c.check(t1 == 3.0, || format!("theorem1 {t1}"));
    let report = all_bounds(
        &BoundInput::Magnitudes(m.to_vec()),
        &BoundOptions::default(),
    )
    .unwrap();
    c.check(
        report.sharpest.as_deref() == Some(names::THEOREM_4_1),
        || format!("sharpest {:?}", report.sharpest),
    );
    c.finish(format!(
        "C=9 O_max=8 O_sum=9 F={fj:.4} T1=3 sharpest=theorem_4_1"
    ))
}

fn criterion_2() -> Outcome {
    let m = [1.0, 0.0, 100.0];
    let mut c = Checks::default();
    let cl = cauchy_lower(&m).unwrap().value;
    c.check((cl - 1.0 / 101.0).abs() <= 1e-9, || {
        format!("cauchy_lower {cl}")
    });
    let t2 = theorem2(&m, 0.1).unwrap().value;
    c.check(t2 == 0.05, || format!("theorem2(0.1) {t2}"));
    let opt = theorem2_opt(&m, Bracket::new(1e-3, 1e3).unwrap()).unwrap();
    c.check((opt.value - 0.05).abs() <= 1e-6, || {
        format!("theorem2_opt {}", opt.value)
    });
    let w = match opt.params {
        Some(qbound::bounds::BoundParams::Weight { w, .. }) => w,
        _ => f64::NAN,
    };
    c.check((w - 0.1).abs() <= 1e-3, || format!("w* {w}"));
    c.finish(format!(
        "L_C={cl:.9} T2(0.1)={t2} T2*={:.9} w*={w:.6}",
        opt.value
    ))
}

fn criterion_3() -> Outcome {
    let v = [0.0, 0.0, 64.0, 0.0];
    let w = WeightVector::new(vec![256.0, 64.0, 16.0, 4.0, 1.0]).unwrap();
    let mut c = Checks::default();
    let p = Theorem3Parts::new(&v, &w).unwrap();
    c.check((p.gamma, p.a, p.c, p.s) == (4.0, 4.0, 4.0, 4.0), || {
        format!("parts {p:?}")
    });
    let printed = theorem3(&v, &w, Theorem3Variant::AsPrinted).unwrap().value;
    c.check(printed == 12.0, || format!("as_printed {printed}"));
    let proof = theorem3(&v, &w, Theorem3Variant::ProofForm).unwrap().value;
    c.check(proof == 8.0, || format!("proof_form {proof}"));
    let bb = block_bound(p.gamma, p.s, p.c, p.a).unwrap();
    c.check(bb == proof, || format!("block_bound {bb}"));
    // Second route: eigenvalues of the 2×2 block-norm matrix.
    let rho = Matrix2::new(p.gamma, p.s, p.c, p.a)
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    c.check((rho - proof).abs() <= 1e-12, || format!("2x2 eigen {rho}"));
    let fj = fujiwara(&v).unwrap().value;
    c.check(fj == 16.0, || format!("fujiwara {fj}"));
    let cu = cauchy_upper(&v).unwrap().value;
    c.check(cu == 65.0, || format!("cauchy_upper {cu}"));
    for variant in [OpferVariant::Sum, OpferVariant::Max] {
        let o = opfer(&v, variant).unwrap().value;
        c.check(o == 64.0, || format!("opfer {variant:?} {o}"));
    }
    let opt = theorem3_opt(
        &v,
        Theorem3Variant::AsPrinted,
        Bracket::new(1e-2, 1e2).unwrap(),
        None,
    )
    .unwrap()
    .value;
    c.check(opt <= 12.0 + 1e-9, || format!("theorem3_opt {opt}"));
    c.finish(format!(
        "γ=A=c=S=4 printed=12 proof=8 eig={rho} F=16 C=65 O=64 opt={opt:.6}"
    ))
}

/// Left and right random monic polynomials, degrees 2–6, moduli ≤ 10.
fn soundness_corpus() -> Vec<QPolynomial> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for i in 0..500u64 {
            let degree = 2 + (i % 5) as usize;
            out.push(random_poly(degree, 10.0, 1000 + i, side).unwrap());
        }
    }
    out
}

/// Right polynomials `(z - a) * (z - b)` and left `(z - b) * (z - a)`:
/// the zero moduli are exactly `|a|` and `|b|`.
fn factored_fixtures() -> Vec<(QPolynomial, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    (0..100)
        .map(|i| {
            let a = rand_q(&mut rng, 3.0);
            let b = rand_q(&mut rng, 3.0);
            let side = if i % 2 == 0 { Side::Right } else { Side::Left };
            let la = QPolynomial::monic(side, &[-a]).unwrap();
            let lb = QPolynomial::monic(side, &[-b]).unwrap();
            let f = match side {
                Side::Right => la.conv(&lb).unwrap(),
                Side::Left => lb.conv(&la).unwrap(),
            };
            (
                f,
                a.modulus().min(b.modulus()),
                a.modulus().max(b.modulus()),
            )
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let opts = BoundOptions::default();
    let mut c = Checks::default();
    let (mut upper_checks, mut lower_checks, mut reference_misses) = (0, 0, 0);
    for (k, f) in soundness_corpus().iter().enumerate() {
        let spectrum = root_moduli(f).unwrap();
        let inputs = [
            BoundInput::Polynomial(f.clone()),
            BoundInput::Magnitudes(f.lower_moduli()),
        ];
        for input in inputs {
            let report = all_bounds(&input, &opts).unwrap();
            let v = verify_spectrum(spectrum.clone(), &report);
            upper_checks += v
                .checks
                .iter()
                .filter(|b| b.kind == BoundKind::Upper)
                .count();
            lower_checks += v
                .checks
                .iter()
                .filter(|b| b.kind == BoundKind::Lower)
                .count();
            reference_misses += v.reference.iter().filter(|b| !b.pass).count();
            for b in v.failures() {
                c.check(false, || {
                    format!("#{k} {} {:?} margin {:e}", f.side(), b.name, b.margin)
                });
            }
        }
    }
    for (k, (f, min, max)) in factored_fixtures().into_iter().enumerate() {
        let report = all_bounds(&BoundInput::Polynomial(f), &opts).unwrap();
        for b in &report.bounds {
            let ok = match b.kind {
                BoundKind::Upper => b.value >= max - 1e-7,
                BoundKind::Lower => b.value <= min + 1e-7,
                BoundKind::Reference => true,
            };
            c.check(ok, || format!("fixture {k} {} {}", b.name, b.value));
        }
    }
    c.finish(format!(
        "{upper_checks} upper and {lower_checks} lower checks hold on 1000 random + 100 factored; \
         opfer_max (not guaranteed) exceeded {reference_misses} times"
    ))
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> QMatrix {
    let entries = (0..rows * cols).map(|_| rand_q(rng, 2.0)).collect();
    QMatrix::new(rows, cols, entries).unwrap()
}

/// `‖[[a, b], [c, d]]‖₂` in closed form.
fn two_by_two_norm(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let f2 = a * a + b * b + c * c + d * d;
    let det = a * d - b * c;
    (0.5 * (f2 + (f2 * f2 - 4.0 * det * det).max(0.0).sqrt())).sqrt()
}

fn criterion_5() -> (Outcome, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rel = |x: f64, y: f64| (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1e-300);
    let mut c = Checks::default();
    let mut literal_misses = 0;
    for k in 0..200 {
        let n = rng.random_range(2..=6usize);
        let m = rng.random_range(1..=6usize);
        let rect = random_matrix(&mut rng, m, n);
        let ct = rect.conj_transpose();
        let (n1, ninf) = (rect.norm(NormKind::One), ct.norm(NormKind::Inf));
        c.check(rel(n1, ninf), || {
            format!("#{k} 1-norm {n1} vs ∞-norm of A* {ninf}")
        });
        let (ninf, n1) = (rect.norm(NormKind::Inf), ct.norm(NormKind::One));
        c.check(rel(ninf, n1), || {
            format!("#{k} ∞-norm {ninf} vs 1-norm of A* {n1}")
        });
        let fro = rect.norm(NormKind::Frobenius);
        let adj_fro = rect.complex_adjoint().norm();
        c.check(rel(adj_fro, 2f64.sqrt() * fro), || {
            format!("#{k} adjoint Frobenius {adj_fro} vs {fro}")
        });
        let two = rect.norm(NormKind::Two);
        let holder = rect.norm(NormKind::One) * rect.norm(NormKind::Inf);
        c.check(two * two <= holder * (1.0 + 1e-9), || {
            format!("#{k} ‖A‖₂² {} > ‖A‖₁‖A‖∞ {holder}", two * two)
        });

        let a = random_matrix(&mut rng, n, n);
        let p = rng.random_range(1..n);
        let q = n - p;
        let blk = |r0, c0, nr, nc| a.block(r0, c0, nr, nc).unwrap().norm(NormKind::Two);
        let (b11, b12, b21, b22) = (
            blk(0, 0, p, p),
            blk(0, p, p, q),
            blk(p, 0, q, p),
            blk(p, p, q, q),
        );
        let norm = a.norm(NormKind::Two);
        let tilde_norm = two_by_two_norm(b11, b12, b21, b22);
        c.check(norm <= tilde_norm * (1.0 + 1e-9), || {
            format!("#{k} ‖A‖₂ {norm} > ‖Ã‖₂ {tilde_norm}")
        });
        let rho = a.right_spectral_radius().unwrap();
        let bb = block_bound(b11, b12, b21, b22).unwrap();
        c.check(rho <= bb * (1.0 + 1e-9), || {
            format!("#{k} ρ_r(A) {rho} > ρ(Ã) {bb}")
        });
        if norm > bb * (1.0 + 1e-9) {
            literal_misses += 1;
        }
    }
    (
        c.finish("1↔∞ duality, Frobenius factor √2, ‖A‖₂ ≤ ‖Ã‖₂ and ρ_r(A) ≤ ρ(Ã) on 200 matrices"),
        literal_misses,
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut c = Checks::default();
    let mut worst = f64::NEG_INFINITY;
    for k in 0..200u64 {
        let a = rand_q(&mut rng, 4.0);
        let h = random_poly(rng.random_range(1..=4), 6.0, 600 + k, Side::Right).unwrap();
        let f = QPolynomial::monic(Side::Right, &[-a])
            .unwrap()
            .conv(&h)
            .unwrap();
        let mut comp = QMatrix::companion(&f, CompanionKind::Right).unwrap();
        if k % 2 == 1 {
            let w: Vec<f64> = (0..comp.rows())
                .map(|_| rng.random_range(0.1..10.0))
                .collect();
            comp = comp.scale_similarity(&w).unwrap();
        }
        let region = comp.gershgorin(GershgorinVariant::Row).unwrap();
        let excess = region.excess(a);
        worst = worst.max(excess);
        c.check(excess <= 1e-9, || format!("#{k} excess {excess:e}"));
    }
    c.finish(format!(
        "200 known zeros inside row Gershgorin regions, worst excess {worst:.3e}"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut c = Checks::default();
    let mut worst: f64 = 0.0;
    for k in 0..200u64 {
        let side = if k % 2 == 0 { Side::Right } else { Side::Left };
        let a = rand_q(&mut rng, 4.0);
        let base = random_poly(rng.random_range(1..=3), 6.0, 700 + k, side).unwrap();
        let g = random_poly(rng.random_range(1..=3), 6.0, 900 + k, side).unwrap();
        let root = QPolynomial::monic(side, &[-a]).unwrap();
        // f(a) = 0 with the root factor on the side whose zeros survive
        // convolution: leftmost for right polynomials, rightmost for left.
        let (f, prod) = match side {
            Side::Right => {
                let f = root.conv(&base).unwrap();
                let p = f.conv(&g).unwrap();
                (f, p)
            }
            Side::Left => {
                let f = base.conv(&root).unwrap();
                let p = g.conv(&f).unwrap();
                (f, p)
            }
        };
        let scale: f64 = prod
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, q)| q.modulus() * a.modulus().powi(i as i32))
            .sum();
        let fa = f.eval(a).modulus();
        let pa = prod.eval(a).modulus();
        worst = worst.max(pa / (1.0 + scale));
        c.check(fa <= 1e-8 * (1.0 + scale), || format!("#{k} f(a) {fa:e}"));
        c.check(pa <= 1e-8 * (1.0 + scale), || {
            format!("#{k} {side} (f*g)(a) {pa:e} scale {scale:e}")
        });
    }
    c.finish(format!(
        "200 products vanish at the planted zero, worst relative residue {worst:.3e}"
    ))
}

fn criterion_8() -> Outcome {
    let mut c = Checks::default();
    for (m, tag) in [
        (&[8.0, 1.0, 0.0][..], ProfileTag::HeavyTail),
        (&[0.0, 0.0, 64.0, 0.0], ProfileTag::MiddleBulge),
        (&[1.0, 0.5], ProfileTag::FlatSmall),
        (&[0.0, 0.0, 5.0], ProfileTag::TopHeavy),
    ] {
        let got = classify(m, 1.5).unwrap().tag;
        c.check(got == tag, || format!("{m:?} classified {got:?}"));
    }
    let opts = SelectOptions::default();
    let mut count = 0;
    for f in soundness_corpus() {
        let spectrum = root_moduli(&f).unwrap();
        for input in [
            BoundInput::Polynomial(f.clone()),
            BoundInput::Magnitudes(f.lower_moduli()),
        ] {
            let r = select(&input, &opts).unwrap();
            let min = r.uppers().map(|b| b.value).fold(f64::INFINITY, f64::min);
            c.check((r.upper.value - min).abs() <= 1e-12, || {
                format!("U {} vs min {min}", r.upper.value)
            });
            c.check(r.upper.value >= spectrum.max - 1e-7, || {
                format!("U {} below oracle", r.upper.value)
            });
            c.check(r.lower.value <= spectrum.min + 1e-7, || {
                format!("L {} above oracle", r.lower.value)
            });
            c.check(!r.inconsistent, || "inconsistent U < L".to_string());
            count += 1;
        }
    }
    c.finish(format!(
        "four profiles reproduced; U = min of computed uppers on {count} selections"
    ))
}

fn criterion_9() -> Outcome {
    let mut c = Checks::default();
    let mut worst: f64 = 0.0;
    for k in 0..100u64 {
        let n = 4 + (k % 2) as usize;
        let f = random_poly(n, 10.0, 9000 + k, Side::Right).unwrap();
        let aux = AuxPolynomial::from_right_monic(&f).unwrap();
        let qn = aux.origin()[n - 1].modulus();
        let got = root_moduli(&aux.to_polynomial()).unwrap().moduli;
        let mut want = root_moduli(&f).unwrap().moduli;
        want.extend([qn, qn]);
        want.sort_by(f64::total_cmp);
        c.check(got.len() == want.len(), || {
            format!("#{k} lengths {} vs {}", got.len(), want.len())
        });
        for (g, w) in got.iter().zip(&want) {
            worst = worst.max((g - w).abs());
            c.check((g - w).abs() <= 1e-6, || format!("#{k} modulus {g} vs {w}"));
        }
    }
    c.finish(format!(
        "100 auxiliary spectra match source ∪ {{|q_n|}}, worst gap {worst:.3e}"
    ))
}

fn criterion_10() -> Outcome {
    let cfg = BenchConfig {
        seed: 7,
        count: 100,
        degrees: DegreeRange::new(2, 6).unwrap(),
        ..BenchConfig::default()
    };
    let run = || {
        let mut buf = Vec::new();
        bench::write_csv(&bench::run_bench(&cfg).unwrap(), &mut buf).unwrap();
        buf
    };
    let (a, b) = (run(), run());
    outcome(
        a == b && !a.is_empty(),
        format!(
            "two seeded runs, {} bytes each, identical: {}",
            a.len(),
            a == b
        ),
    )
}

fn main() -> ExitCode {
    let (c5, literal_misses) = criterion_5();
    let results = [
        ("1", "heavy constant term, mags 8 1 0", criterion_1()),
        ("2", "dominant top term, mags 1 0 100", criterion_2()),
        ("3", "middle spike, v-list 0 0 64 0", criterion_3()),
        ("4", "soundness sweep", criterion_4()),
        ("5", "norm oracle suite", c5),
        ("6", "Gershgorin containment", criterion_6()),
        ("7", "convolution zero propagation", criterion_7()),
        ("8", "selector routing", criterion_8()),
        ("9", "auxiliary-polynomial spectrum", criterion_9()),
        ("10", "bench determinism", criterion_10()),
    ];
    let mut failed = 0;
    for (id, name, o) in &results {
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!("{verdict} [{id}] {name}: {}", o.detail);
        failed += usize::from(!o.ok);
    }
    println!(
        "info: ‖A‖₂ exceeded ρ(Ã) on {literal_misses} of 200 matrices; the norm is dominated by ‖Ã‖₂, \
         the spectral radius by ρ(Ã)"
    );
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
