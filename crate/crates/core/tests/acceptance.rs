//! Acceptance suite: one test per numbered criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Tolerances are pinned here,
//! not configurable.

use num_complex::Complex64;

use qcyclo_core::arith::{in_p0, mod_pow, sieve_primes};
use qcyclo_core::group::{
    case_c_smith, displayed_n_orders, invariant_factors, invariant_factors_of_orders, subgroup_n,
    CaseTag, FieldParams,
};
use qcyclo_core::lfunc::{
    artin_product, corollary_report, expand_euler, explicit_index_of, explicit_local_factor,
    generic_local_factor, one_dim_aggregate_int, unramified_zeta_identity,
};
use qcyclo_core::reps::{
    character_row, enumerate_n_characters, enumerate_one_dim, enumerate_two_dim, induce,
    is_irreducible, n_basis, verify_homomorphism, Irrep,
};
use qcyclo_core::units::{eval_unit, sine_product_factors};

const TEST_PAIRS: [(i64, i64); 13] = [
    (-1, 2),
    (-1, 3),
    (-1, 5),
    (-1, 13),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 5),
    (3, 7),
    (5, 7),
    (5, 11),
    (5, 13),
    (13, 17),
];

fn report(criterion: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("acceptance {criterion}: PASS"),
        Err(msg) => {
            println!("acceptance {criterion}: FAIL");
            panic!("{criterion} failed: {msg}");
        }
    }
}

fn all_irreps(params: &FieldParams) -> Vec<Irrep> {
    let mut out: Vec<Irrep> = enumerate_one_dim(params)
        .into_iter()
        .map(Irrep::OneDim)
        .collect();
    out.extend(
        enumerate_two_dim(params)
            .expect("two-dim enumeration")
            .into_iter()
            .map(Irrep::TwoDim),
    );
    out
}

fn check_1() -> Result<(), String> {
    for (p, q) in TEST_PAIRS {
        let pr = FieldParams::new(p, q).map_err(|e| e.to_string())?;
        let g = pr.group_order();
        let one = enumerate_one_dim(&pr);
        let two = enumerate_two_dim(&pr).map_err(|e| e.to_string())?;
        if one.len() as u64 != g {
            return Err(format!("({p},{q}): {} one-dim, want {g}", one.len()));
        }
        if two.len() as u64 != g / 4 {
            return Err(format!("({p},{q}): {} two-dim, want {}", two.len(), g / 4));
        }
        let irreps = all_irreps(&pr);
        for r in &irreps {
            if !verify_homomorphism(&pr, r) {
                return Err(format!("({p},{q}): relation check failed for {r:?}"));
            }
        }
        let dim_sq: u64 = irreps.iter().map(|r| r.dim() * r.dim()).sum();
        if dim_sq != pr.lifted_order() {
            return Err(format!("({p},{q}): sum of dim^2 = {dim_sq}"));
        }
        let classes = pr.conjugacy_classes();
        if classes.len() as u64 != g + g / 4 {
            return Err(format!(
                "({p},{q}): {} classes, want {}",
                classes.len(),
                g + g / 4
            ));
        }
        // orthonormality within 1e-9
        let elements = pr.enumerate_elements();
        let rows: Vec<Vec<Complex64>> = irreps
            .iter()
            .map(|r| {
                character_row(r, &elements)
                    .iter()
                    .map(|c| c.eval())
                    .collect()
            })
            .collect();
        for a in 0..rows.len() {
            for b in a..rows.len() {
                let mut ip = Complex64::new(0.0, 0.0);
                for (x, y) in rows[a].iter().zip(&rows[b]) {
                    ip += x * y.conj();
                }
                ip /= elements.len() as f64;
                let expect = if a == b { 1.0 } else { 0.0 };
                if (ip.re - expect).abs() > 1e-9 || ip.im.abs() > 1e-9 {
                    return Err(format!("({p},{q}): <{a},{b}> = {ip}"));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_1_representation_completeness() {
    report("criterion 1 (representation completeness)", check_1());
}

fn check_2() -> Result<(), String> {
    for (p, q) in TEST_PAIRS {
        let pr = FieldParams::new(p, q).map_err(|e| e.to_string())?;
        let basis = n_basis(&pr).map_err(|e| e.to_string())?;
        let elements = pr.enumerate_elements();
        let two = enumerate_two_dim(&pr).map_err(|e| e.to_string())?;
        let exact_rows: Vec<_> = two
            .iter()
            .map(|r| character_row(&Irrep::TwoDim(r.clone()), &elements))
            .collect();
        let float_rows: Vec<Vec<Complex64>> = exact_rows
            .iter()
            .map(|row| row.iter().map(|c| c.eval()).collect())
            .collect();
        let mut hit = vec![false; two.len()];
        for chi in enumerate_n_characters(&basis) {
            if !is_irreducible(&pr, &basis, &chi).map_err(|e| e.to_string())? {
                continue;
            }
            let ind = induce(&pr, &basis, &chi).map_err(|e| e.to_string())?;
            let row = ind.character_row(&elements);
            let row_c: Vec<Complex64> = row.iter().map(|c| c.eval()).collect();
            let candidates: Vec<usize> = float_rows
                .iter()
                .enumerate()
                .filter(|(_, fr)| {
                    fr.iter()
                        .zip(&row_c)
                        .all(|(a, b)| (a - b).norm() < 1e-6)
                })
                .map(|(k, _)| k)
                .collect();
            if candidates.len() != 1 {
                return Err(format!(
                    "({p},{q}) chi {:?}: {} candidate matches",
                    chi.exps,
                    candidates.len()
                ));
            }
            let k = candidates[0];
            for (a, b) in exact_rows[k].iter().zip(&row) {
                if !a.eq_exact(b) {
                    return Err(format!(
                        "({p},{q}) chi {:?}: exact character mismatch against member {k}",
                        chi.exps
                    ));
                }
            }
            hit[k] = true;
        }
        if !hit.iter().all(|&h| h) {
            return Err(format!("({p},{q}): not every two-dim member induced"));
        }
    }
    Ok(())
}

#[test]
fn criterion_2_induction_oracle() {
    report("criterion 2 (induction oracle)", check_2());
}

fn check_3() -> Result<(), String> {
    for (p, q) in TEST_PAIRS {
        let pr = FieldParams::new(p, q).map_err(|e| e.to_string())?;
        let n = subgroup_n(&pr);
        let brute = invariant_factors(&pr, &n.elements).map_err(|e| e.to_string())?;
        let displayed = invariant_factors_of_orders(&displayed_n_orders(&pr));
        if brute != displayed {
            return Err(format!(
                "({p},{q}): invariant factors {brute:?} vs displayed {displayed:?}"
            ));
        }
        if matches!(pr.case, CaseTag::CFirst | CaseTag::CSecond) {
            let smith = case_c_smith(&pr).map_err(|e| e.to_string())?;
            // the constructor verifies P A Q = B, det P = det Q = 1 and the
            // tau/mu orders; double-check the headline identities here
            let (d, s) = (smith.d, smith.s);
            if smith.b_mat[0][0] != d || smith.b_mat[0][1] != 0 || smith.b_mat[1][0] != 0 {
                return Err(format!("({p},{q}): diagonal form off: {:?}", smith.b_mat));
            }
            if pr.element_order(smith.tau) != d as u64 {
                return Err(format!("({p},{q}): tau order"));
            }
            if pr.element_order(smith.mu) != smith.mu_order()
                || smith.mu_order() != (2 * s) as u64 * (smith.t * smith.d) as u64
            {
                return Err(format!("({p},{q}): mu order"));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_3_subgroup_structure() {
    report("criterion 3 (subgroup structure)", check_3());
}

fn check_4() -> Result<(), String> {
    let primes = sieve_primes(2000);
    for q in [2i64, 3, 5, 7, 13, 17] {
        let pr = FieldParams::new(-1, q).map_err(|e| e.to_string())?;
        let reps = enumerate_two_dim(&pr).map_err(|e| e.to_string())?;
        for rep in &reps {
            let j = explicit_index_of(&pr, rep).map_err(|e| e.to_string())?;
            for &ell in &primes {
                let ex = explicit_local_factor(&pr, j, ell).map_err(|e| e.to_string())?;
                let gen = generic_local_factor(&pr, rep, ell).map_err(|e| e.to_string())?;
                if !ex.inverse.eq_exact(&gen.inverse) {
                    return Err(format!(
                        "q={q} j={j} l={ell}: explicit {:?} vs determinant {:?}",
                        ex.inverse, gen.inverse
                    ));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_4_local_factor_oracle() {
    report("criterion 4 (local-factor oracle)", check_4());
}

fn check_5() -> Result<(), String> {
    for ell in sieve_primes(100_000) {
        if ell % 8 != 1 {
            continue;
        }
        let quartic = mod_pow(2, (ell - 1) / 4, ell) == 1;
        if in_p0(ell) != quartic {
            return Err(format!("l={ell}: form test {} vs quartic residue {quartic}", in_p0(ell)));
        }
    }
    Ok(())
}

#[test]
fn criterion_5_p0_criterion() {
    report("criterion 5 (quartic residue form criterion)", check_5());
}

fn check_6() -> Result<(), String> {
    for q in [3i64, 5, 7, 13, 17] {
        let pr = FieldParams::new(-1, q).map_err(|e| e.to_string())?;
        for ell in sieve_primes(2000) {
            if ell == 2 || ell as i64 == q {
                continue;
            }
            if !unramified_zeta_identity(&pr, ell).map_err(|e| e.to_string())? {
                return Err(format!("q={q} l={ell}: identity fails"));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_6_unramified_zeta_identity() {
    report("criterion 6 (unramified zeta identity)", check_6());
}

fn check_7() -> Result<(), String> {
    let mut problems = Vec::new();
    for q in [3i64, 5, 7, 13] {
        let pr = FieldParams::new(-1, q).map_err(|e| e.to_string())?;
        let report = corollary_report(&pr, 2000).map_err(|e| e.to_string())?;
        for row in &report {
            if row.flagged_subcase {
                if row.agree {
                    problems.push(format!(
                        "q={q} l={}: expected the flagged sub-case to disagree",
                        row.prime
                    ));
                }
            } else if !row.agree {
                problems.push(format!(
                    "q={q} l={}: printed closed form disagrees outside the flagged sub-case \
                     (direct {:?} vs printed {:?})",
                    row.prime, row.direct, row.printed
                ));
            }
        }
        // the named example must be flagged, not hidden
        if q == 7 {
            let at3 = report.iter().find(|c| c.prime == 3).unwrap();
            if !at3.flagged_subcase || at3.agree {
                problems.push("q=7 l=3: flagged example missing".to_string());
            }
            let mut direct = vec![0i64; 13];
            direct[0] = 1;
            direct[6] = -2;
            direct[12] = 1;
            let mut printed = vec![0i64; 13];
            printed[0] = 1;
            printed[12] = -1;
            if at3.direct != direct || at3.printed != printed {
                problems.push(format!(
                    "q=7 l=3: expected direct {direct:?} and printed {printed:?}, got {:?} / {:?}",
                    at3.direct, at3.printed
                ));
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        let shown = problems.iter().take(4).cloned().collect::<Vec<_>>().join("; ");
        Err(format!(
            "{} disagreement(s) outside the single excepted sub-case. The direct product is \
             confirmed by the determinant route at every prime (criterion 4), so the printed \
             closed form itself is off in further sub-cases: (q = 3 mod 4, l = 1 mod 4, 4 | b) \
             where the inner sign of (1 + u^f T^f)^2g should be -, and (q = 1 mod 4, \
             l = 3 mod 4, v2(b) >= v2(q-1)) where (1 - T^f)^2g should be (1 - T^2f)^g. \
             Examples: {shown}{}",
            problems.len(),
            if problems.len() > 4 { "; ..." } else { "" }
        ))
    }
}

#[test]
fn criterion_7_corollary_comparison() {
    report("criterion 7 (closed-form comparison)", check_7());
}

fn poly_mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn check_8() -> Result<(), String> {
    const N: usize = 10_000;
    for q in [5i64, 7, 13] {
        let pr = FieldParams::new(-1, q).map_err(|e| e.to_string())?;
        let (factors, coeffs) = artin_product(&pr, N as u64, N).map_err(|e| e.to_string())?;

        // floating route through the exact per-prime factors
        let float_factors: Vec<(u64, Vec<Complex64>)> = factors
            .iter()
            .map(|f| (f.prime, f.inverse.eval_coeffs()))
            .collect();
        let float_coeffs = expand_euler(&float_factors, N);
        for n in 1..=N {
            if n % 2 == 0 || n as i64 % q == 0 {
                continue;
            }
            let c = float_coeffs[n];
            if c.im.abs() > 1e-6 || (c.re - c.re.round()).abs() > 1e-6 {
                return Err(format!("q={q} n={n}: coefficient {c} is not a real integer"));
            }
            if c.re.round() as i64 != coeffs[n] {
                return Err(format!(
                    "q={q} n={n}: float route {} vs exact route {}",
                    c.re.round(),
                    coeffs[n]
                ));
            }
        }

        // completion by the one-dimensional factors: nonnegative counts
        let mut completed_factors: Vec<(u64, Vec<i128>)> = Vec::new();
        for f in &factors {
            if f.prime == 2 || f.prime as i64 == q {
                continue;
            }
            let one_dim = one_dim_aggregate_int(&pr, f.prime).map_err(|e| e.to_string())?;
            let full = poly_mul_i64(&one_dim, &f.inverse_int);
            completed_factors.push((f.prime, full.iter().map(|&c| c as i128).collect()));
        }
        let completed = expand_euler(&completed_factors, N);
        for n in 1..=N {
            if n % 2 == 0 || n as i64 % q == 0 {
                continue;
            }
            if completed[n] < 0 {
                return Err(format!("q={q} n={n}: completed coefficient {}", completed[n]));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_8_zeta_coefficients() {
    report("criterion 8 (zeta-ratio coefficients)", check_8());
}

fn check_9() -> Result<(), String> {
    for q in [3i64, 5, 13, 17] {
        let pr = FieldParams::new(-1, q).map_err(|e| e.to_string())?;
        let u = eval_unit(&pr, 53, false).map_err(|e| e.to_string())?;
        let sq_re = u.re * u.re - u.im * u.im;
        let sq_im = 2.0 * u.re * u.im;
        let star = pr.q.star() as f64;
        if (sq_re - star).abs() > 1e-12 * star.abs() || sq_im.abs() > 1e-12 * star.abs() {
            return Err(format!("q={q}: unit square {sq_re}+{sq_im}i vs {star}"));
        }
    }
    let factors = sine_product_factors(3, 5).map_err(|e| e.to_string())?;
    let forward: f64 = factors.iter().product();
    if !(forward > 0.0) {
        return Err("v(3,5) is not positive".to_string());
    }
    let reverse: f64 = factors.iter().rev().product();
    let mut odd_even = 1.0;
    for (k, f) in factors.iter().enumerate() {
        if k % 2 == 0 {
            odd_even *= f;
        }
    }
    for (k, f) in factors.iter().enumerate() {
        if k % 2 == 1 {
            odd_even *= f;
        }
    }
    for other in [reverse, odd_even] {
        if (forward - other).abs() > 1e-10 * forward.abs() {
            return Err(format!("reorder drift: {forward} vs {other}"));
        }
    }
    Ok(())
}

#[test]
fn criterion_9_units() {
    report("criterion 9 (unit values)", check_9());
}
