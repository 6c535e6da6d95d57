//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Runs as a plain binary (`harness = false`) so each criterion reports a
//! single summary line; the process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use metabelian::aut::{exp_ad, inner_jacobian, IAEndomorphism};
use metabelian::bch::{bch_compose, gerritzen_c};
use metabelian::canonical::{reduce, same_coset, shape_check};
use metabelian::envelope::rep_bch;
use metabelian::lie::{AlgebraConfig, LieElement};
use metabelian::poly::{int, rat, Rational, TruncPoly};
use metabelian::sample;
use metabelian::wreath::{embed, lift_element, membership, partials, JacobianMatrix};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const GRID_RANKS: [usize; 3] = [2, 3, 4];
const GRID_CLASSES: [u32; 4] = [3, 4, 5, 6];

fn grid() -> impl Iterator<Item = AlgebraConfig> {
    GRID_RANKS
        .into_iter()
        .flat_map(|m| GRID_CLASSES.into_iter().map(move |c| AlgebraConfig::new(m, c).unwrap()))
}

fn rng_for(criterion: u64, cfg: AlgebraConfig) -> StdRng {
    StdRng::seed_from_u64(criterion * 1_000 + cfg.rank() as u64 * 10 + cfg.class() as u64)
}

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1() -> Check {
    for cap in 2..=6 {
        let c = ok(gerritzen_c(cap))?;
        ensure!(c.coeff(0, 0) == rat(1, 2), "constant term at cap {cap}");
        ensure!(c.coeff(1, 0) == rat(-1, 12), "t coefficient at cap {cap}");
        ensure!(c.coeff(0, 1) == rat(1, 12), "u coefficient at cap {cap}");
        ensure!(c.coeff(1, 1) == rat(-1, 24), "tu coefficient at cap {cap}");
    }
    Ok("c = 1/2 - t/12 + u/12 - tu/24 + ... at caps 2..6".into())
}

fn criterion_2_3(pairs: usize) -> (Check, Check) {
    let mut sound = Ok(());
    let mut oracle = Ok(());
    let mut total = 0;
    for cfg in grid() {
        let mut rng = rng_for(2, cfg);
        for _ in 0..pairs {
            let u = sample::lie_element(&mut rng, cfg);
            let v = sample::lie_element(&mut rng, cfg);
            let w = match bch_compose(&u, &v) {
                Ok(w) => w,
                Err(e) => {
                    sound = Err(format!("bch_compose failed: {e}"));
                    continue;
                }
            };
            let lhs = exp_ad(&w).expansion;
            // exp(ad u) first, then exp(ad v)
            let rhs = exp_ad(&v).expansion.compose(&exp_ad(&u).expansion);
            if sound.is_ok() && rhs.as_ref() != Ok(&lhs) {
                sound = Err(format!("L({},{}): u = {u}, v = {v}", cfg.rank(), cfg.class()));
            }
            if oracle.is_ok() && rep_bch(&u, &v).as_ref() != Ok(&w) {
                oracle = Err(format!("L({},{}): u = {u}, v = {v}", cfg.rank(), cfg.class()));
            }
            total += 1;
        }
    }
    let msg = format!("{total} pairs over 12 configurations");
    (sound.map(|_| msg.clone()), oracle.map(|_| msg))
}

/// `I + [[(c2 + t1 h) t2, (-c1 + t2 h) t2], [-(c2 + t1 h) t1, -(-c1 + t2 h) t1]] * sum (c1 t1 + c2 t2)^k / (k+1)!`
fn rank_two_closed_form(cfg: AlgebraConfig, c1: &Rational, c2: &Rational, h: &TruncPoly) -> JacobianMatrix {
    let cap = cfg.deriv_cap();
    let h = h.with_cap(cap);
    let t = |i| TruncPoly::var(2, cap, i);
    let series = TruncPoly::linear_form(cap, &[c1.clone(), c2.clone()]).h_series().unwrap();
    let x = &TruncPoly::constant(2, cap, c2.clone()) + &(&t(0) * &h);
    let y = &TruncPoly::constant(2, cap, -c1.clone()) + &(&t(1) * &h);
    let one = TruncPoly::one(2, cap);
    let rows = vec![
        vec![&one + &(&(&x * &t(1)) * &series), &(&y * &t(1)) * &series],
        vec![
            (&(&x * &t(0)) * &series).scale(&int(-1)),
            &one - &(&(&y * &t(0)) * &series),
        ],
    ];
    JacobianMatrix::new(cfg, rows).unwrap()
}

fn criterion_4(samples: usize) -> Check {
    let mut total = 0;
    for cfg in grid() {
        let mut rng = rng_for(4, cfg);
        for _ in 0..samples {
            let u = sample::lie_element(&mut rng, cfg);
            let direct = inner_jacobian(&u);
            ensure!(
                direct == exp_ad(&u).expansion.jacobian(),
                "two-path mismatch at L({},{}) for u = {u}",
                cfg.rank(),
                cfg.class()
            );
            total += 1;
        }
    }
    let mut symbolic = 0;
    for class in GRID_CLASSES {
        let cfg = AlgebraConfig::new(2, class).unwrap();
        let mut rng = rng_for(40, cfg);
        for _ in 0..samples {
            let c1 = if rng.gen_bool(0.8) { sample::rational(&mut rng) } else { Rational::zero() };
            let c2 = if rng.gen_bool(0.8) { sample::rational(&mut rng) } else { Rational::zero() };
            let h = sample::poly(&mut rng, 2, cfg.quad_cap(), 0, 4);
            let u = ok(LieElement::from_parts(cfg, vec![c1.clone(), c2.clone()], vec![((1, 0), h.clone())]))?;
            let expected = rank_two_closed_form(cfg, &c1, &c2, &h);
            ensure!(inner_jacobian(&u) == expected, "closed form mismatch for u = {u}");
            ensure!(exp_ad(&u).expansion.jacobian() == expected, "expansion mismatch for u = {u}");
            symbolic += 1;
        }
    }
    Ok(format!("{total} random u; {symbolic} rank-2 closed-form instances"))
}

fn criterion_5(pairs: usize) -> Check {
    let cfg = AlgebraConfig::new(2, 3).unwrap();
    let phi = ok(IAEndomorphism::from_deltas(cfg, vec![LieElement::commutator(cfg, 1, 0), LieElement::zero(cfg)]))?;
    let psi = ok(IAEndomorphism::from_deltas(cfg, vec![LieElement::zero(cfg), LieElement::commutator(cfg, 1, 0)]))?;
    let p = |terms: &[(&[u32], i64)]| TruncPoly::from_terms(2, 2, terms.iter().map(|(e, c)| (e.to_vec(), int(*c))));
    let fixture = ok(JacobianMatrix::new(
        cfg,
        vec![
            vec![p(&[(&[0, 0], 1), (&[0, 1], -1)]), p(&[(&[0, 1], -1), (&[0, 2], 1)])],
            vec![p(&[(&[1, 0], 1)]), p(&[(&[0, 0], 1), (&[1, 0], 1), (&[1, 1], -1)])],
        ],
    ))?;
    ensure!(ok(phi.compose(&psi))?.jacobian() == fixture, "worked composition fixture");
    let mut total = 0;
    for cfg in grid() {
        let mut rng = rng_for(5, cfg);
        for _ in 0..pairs {
            let a = sample::ia_endomorphism(&mut rng, cfg);
            let b = sample::ia_endomorphism(&mut rng, cfg);
            let ab = ok(a.compose(&b))?;
            ensure!(
                ab.jacobian() == ok(a.jacobian().try_mul(&b.jacobian()))?,
                "J(ab) != J(a)J(b) at L({},{})",
                cfg.rank(),
                cfg.class()
            );
            ensure!(ok(IAEndomorphism::from_jacobian(&a.jacobian()))? == a, "from_jacobian round trip");
            total += 1;
        }
    }
    Ok(format!("fixture matches; {total} random pairs"))
}

fn criterion_6(samples: usize) -> Check {
    let mut total = 0;
    let mut rejected = 0;
    for cfg in grid() {
        let mut rng = rng_for(6, cfg);
        for _ in 0..samples {
            let u = sample::commutator_element(&mut rng, cfg);
            ensure!(membership(&partials(&u)), "ideal element fails the criterion: {u}");
            let v = sample::lie_element(&mut rng, cfg);
            if !v.in_commutator_ideal() {
                ensure!(!membership(&partials(&v)), "element with linear part passes: {v}");
                rejected += 1;
            }
            total += 1;
        }
    }
    Ok(format!("{total} ideal elements accepted; {rejected} non-ideal elements rejected"))
}

fn criterion_7(samples: usize, distinct_target: usize) -> Check {
    let mut total = 0;
    let mut distinct_checked = 0;
    for cfg in grid() {
        let mut rng = rng_for(7, cfg);
        let mut forms: Vec<IAEndomorphism> = Vec::new();
        let mut seen = BTreeSet::new();
        for _ in 0..samples {
            let psi = sample::ia_endomorphism(&mut rng, cfg);
            let trace = ok(reduce(&psi))?;
            let theta = &trace.canonical.theta;
            let tag = format!("L({},{}) psi = {}", cfg.rank(), cfg.class(), psi.to_json());
            ensure!(shape_check(theta), "reduced form fails shape check: {tag}");
            ensure!(
                ok(exp_ad(&trace.combined_inner).expansion.compose(theta))? == psi,
                "factorization: {tag}"
            );
            ensure!(&ok(reduce(theta))?.canonical.theta == theta, "idempotence: {tag}");
            let u = sample::lie_element(&mut rng, cfg);
            let moved = ok(exp_ad(&u).expansion.compose(&psi))?;
            ensure!(ok(same_coset(&moved, &psi))?, "coset invariance: {tag}, u = {u}");
            if seen.insert(theta.to_json().to_string()) {
                forms.push(theta.clone());
            }
            total += 1;
        }
        ensure!(forms.len() >= distinct_target, "only {} distinct forms", forms.len());
        let forms = &forms[..distinct_target];
        for (i, a) in forms.iter().enumerate() {
            for b in &forms[i + 1..] {
                ensure!(!ok(same_coset(a, b))?, "distinct canonical forms share a coset at L({},{})", cfg.rank(), cfg.class());
                distinct_checked += 1;
            }
        }
    }
    Ok(format!("{total} random automorphisms; {distinct_checked} distinct-form pairs separated"))
}

fn criterion_8(samples: usize) -> Check {
    let mut total = 0;
    for cfg in grid() {
        let mut rng = rng_for(8, cfg);
        let tag = |what: &str| format!("{what} at L({},{})", cfg.rank(), cfg.class());
        for _ in 0..samples {
            let x = sample::lie_element(&mut rng, cfg);
            let y = sample::lie_element(&mut rng, cfg);
            let z = sample::lie_element(&mut rng, cfg);
            let k = sample::rational(&mut rng);
            let br = |a: &LieElement, b: &LieElement| a.bracket(b).unwrap();
            let add = |a: &LieElement, b: &LieElement| a.try_add(b).unwrap();

            let jacobi = add(&add(&br(&br(&x, &y), &z), &br(&br(&y, &z), &x)), &br(&br(&z, &x), &y));
            ensure!(jacobi.is_zero(), "{}", tag("Jacobi"));
            ensure!(add(&br(&x, &y), &br(&y, &x)).is_zero(), "{}", tag("anticommutativity"));
            ensure!(br(&x, &x).is_zero(), "{}", tag("[x,x] = 0"));
            ensure!(
                br(&add(&x.scale(&k), &y), &z) == add(&br(&x, &z).scale(&k), &br(&y, &z)),
                "{}",
                tag("left bilinearity")
            );
            ensure!(
                br(&z, &add(&x.scale(&k), &y)) == add(&br(&z, &x).scale(&k), &br(&z, &y)),
                "{}",
                tag("right bilinearity")
            );
            let w = sample::lie_element(&mut rng, cfg);
            ensure!(br(&br(&x, &y), &br(&z, &w)).is_zero(), "{}", tag("metabelian law"));
            let mut long = x.clone();
            for g in 0..cfg.class() {
                long = br(&long, &LieElement::generator(cfg, (g as usize) % cfg.rank()));
            }
            ensure!(long.is_zero(), "{}", tag("nilpotency"));

            ensure!(
                embed(&br(&x, &y)) == embed(&x).bracket(&embed(&y)).unwrap(),
                "{}",
                tag("embed homomorphism")
            );
            ensure!(ok(lift_element(&embed(&x)))? == x, "{}", tag("lift . embed"));

            let lhs = ok(bch_compose(&ok(bch_compose(&x, &y))?, &z))?;
            let rhs = ok(bch_compose(&x, &ok(bch_compose(&y, &z))?))?;
            ensure!(lhs == rhs, "{}", tag("BCH associativity"));
            total += 1;
        }
    }
    Ok(format!("{total} random cases of each identity"))
}

fn report(n: u32, name: &str, started: Instant, result: &Check) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match result {
        Ok(detail) => println!("criterion {n}: PASS  {name} ({detail}; {secs:.1}s)"),
        Err(why) => println!("criterion {n}: FAIL  {name}: {why}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    // `cargo test -- <filter>` passes arguments; the suite always runs in full
    let mut all = true;

    let t = Instant::now();
    all &= report(1, "Gerritzen coefficients", t, &criterion_1());

    let t = Instant::now();
    let (sound, oracle) = criterion_2_3(50);
    all &= report(2, "exp(ad bch(u,v)) = exp(ad v) ∘ exp(ad u)", t, &sound);
    all &= report(3, "closed-form BCH = envelope oracle", t, &oracle);

    let t = Instant::now();
    all &= report(4, "inner Jacobian two-path equality", t, &criterion_4(50));

    let t = Instant::now();
    all &= report(5, "Jacobian is multiplicative and faithful", t, &criterion_5(50));

    let t = Instant::now();
    all &= report(6, "commutator-ideal membership criterion", t, &criterion_6(100));

    let t = Instant::now();
    all &= report(7, "canonical coset representatives", t, &criterion_7(50, 20));

    let t = Instant::now();
    all &= report(8, "structural identities", t, &criterion_8(100));

    if all {
        println!("acceptance: all 8 criteria PASS");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES above");
        ExitCode::FAILURE
    }
}
