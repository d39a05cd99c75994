//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ternary_lrc::bounds::{
    int, locality_row_packing_bound, plotkin_bound, plotkin_feasible, ratio,
    shortening_chain_bound, ChainBound,
};
use ternary_lrc::code::LinearCode;
use ternary_lrc::constructions::{
    construct, near_mds, table_instances, EXTENDED_QR_12_6, LENGTH12_DISTANCE6, MDS_4_2_3,
    NEAR_MDS_PARAMS, PAIRED_8_2,
};
use ternary_lrc::gf3::{Gf3, Gf3Matrix};
use ternary_lrc::locality::{build_cover_matrix, code_locality};
use ternary_lrc::matrix_file;
use ternary_lrc::oracle::{exists_optimal_lrc, scan_parameter_grid, SearchMode, SearchTask};
use ternary_lrc::report::class_table;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: u64) -> Result<(), String> {
    ensure(elapsed.as_secs() < limit_s, || {
        format!("took {:.1}s, limit {limit_s}s", elapsed.as_secs_f64())
    })
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let rows = class_table().map_err(|e| e.to_string())?;
    ensure(rows.len() == 27, || {
        format!("{} rows, expected 27", rows.len())
    })?;
    for row in &rows {
        ensure(row.verified(), || {
            format!(
                "{}: expected {:?}, measured {:?}",
                row.class, row.expected, row.measured
            )
        })?;
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "27 rows verified in {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn params_of(h: &Gf3Matrix) -> Result<(usize, usize, usize, usize), String> {
    let code = LinearCode::from_parity_check(h).map_err(|e| e.to_string())?;
    let d = code.min_distance().map_err(|e| e.to_string())?;
    let r = code_locality(&code)
        .map_err(|e| e.to_string())?
        .code_locality();
    Ok((code.n(), code.k(), d, r))
}

fn fixed_matrices() -> Outcome {
    let mds = Gf3Matrix::from_digits(&MDS_4_2_3).unwrap();
    let code = LinearCode::from_parity_check(&mds).map_err(|e| e.to_string())?;
    let a3 = code
        .weight_distribution()
        .map_err(|e| e.to_string())?
        .get(3);
    let (n, k, d, _) = params_of(&mds)?;
    ensure((n, k, d, a3) == (4, 2, 3, 8), || {
        format!("[4,2,3]: got [{n},{k},{d}] A_3={a3}")
    })?;

    let (n, k, d, _) = params_of(&Gf3Matrix::from_digits(&PAIRED_8_2).unwrap())?;
    ensure((n, k, d) == (8, 2, 6), || {
        format!("[8,2,6]: got [{n},{k},{d}]")
    })?;

    let got = params_of(&Gf3Matrix::from_digits(&EXTENDED_QR_12_6).unwrap())?;
    ensure(got == (12, 6, 6, 5), || {
        format!("[12,6,6] r=5: got {got:?}")
    })?;

    let got = params_of(&Gf3Matrix::from_digits(&LENGTH12_DISTANCE6).unwrap())?;
    ensure(got == (12, 5, 6, 2), || {
        format!("[12,5,6] r=2: got {got:?}")
    })?;
    Ok("[4,2,3] A_3=8, [8,2,6], [12,6,6] r=5, [12,5,6] r=2".into())
}

fn near_mds_hierarchy() -> Outcome {
    let start = Instant::now();
    for &(n, k) in NEAR_MDS_PARAMS.iter() {
        let code = near_mds(n, k).map_err(|e| e.to_string())?;
        let ghw = code
            .generalized_hamming_weights()
            .map_err(|e| e.to_string())?;
        let expected: Vec<usize> = (1..=k)
            .map(|i| if i == 1 { n - k } else { n - k + i })
            .collect();
        ensure(ghw.weights() == expected.as_slice(), || {
            format!(
                "[{n},{k}]: weights {:?}, expected {expected:?}",
                ghw.weights()
            )
        })?;
    }
    within(start.elapsed(), 120)?;
    Ok(format!(
        "16 codes near-MDS in {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn single_worker(n: usize, k: usize, r: usize) -> SearchTask {
    SearchTask {
        target_d: 3,
        workers: 1,
        mode: SearchMode::FindFirst,
        ..SearchTask::optimal(n, k, r)
    }
}

fn nonexistence_oracle() -> Outcome {
    let start = Instant::now();
    let none = exists_optimal_lrc(&single_worker(7, 4, 2)).map_err(|e| e.to_string())?;
    ensure(!none.found && none.examined == 531_441, || {
        format!("(7,4,2): found={} examined={}", none.found, none.examined)
    })?;
    let some = exists_optimal_lrc(&single_worker(6, 3, 2)).map_err(|e| e.to_string())?;
    ensure(some.found, || "(6,3,2): no witness".into())?;
    let witness = LinearCode::from_generator(some.witness.as_ref().unwrap()).unwrap();
    let d = witness.min_distance().unwrap();
    let r = code_locality(&witness).unwrap().code_locality();
    ensure(d >= 3 && r <= 2, || {
        format!("(6,3,2) witness has d={d} r={r}")
    })?;
    within(start.elapsed(), 300)?;
    Ok(format!(
        "(7,4,2) absent after 531441, (6,3,2) found, {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn grid_agreement() -> Outcome {
    let rows = scan_parameter_grid(7, 3u64.pow(12)).map_err(|e| e.to_string())?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| format!("({},{},{})", r.n, r.k, r.r))
        .collect();
    ensure(bad.is_empty(), || {
        format!("disagreement on {}", bad.join(" "))
    })?;
    let found = rows.iter().filter(|r| r.oracle.found).count();
    Ok(format!("{} triples agree ({found} exist)", rows.len()))
}

fn bound_suite() -> Outcome {
    let nine = BigUint::from(9u32);
    // l - k = 2 is the last case Plotkin leaves open for locality 1
    ensure(plotkin_bound(8, &nine).unwrap() == int(6), || {
        "plotkin(8,9) != 6".into()
    })?;
    ensure(plotkin_feasible(8, &nine, 6).unwrap(), || {
        "d=6 at n*=8 rejected".into()
    })?;
    ensure(plotkin_bound(10, &nine).unwrap() == ratio(15, 2), || {
        "plotkin(10,9) != 15/2".into()
    })?;
    ensure(!plotkin_feasible(10, &nine, 8).unwrap(), || {
        "d=8 at n*=10 accepted".into()
    })?;

    for (u, r, expected) in [(2, 1, int(4)), (4, 5, ratio(8, 3)), (3, 2, ratio(13, 3))] {
        let got = locality_row_packing_bound(3, u, r);
        ensure(got == expected, || {
            format!("packing(u={u},r={r}) = {got}, expected {expected}")
        })?;
    }

    let at_most = |n, d| match shortening_chain_bound(n, d) {
        ChainBound::AtMost(v) => Some(v),
        ChainBound::NoBound => None,
    };
    ensure(at_most(8, 4) == Some(BigUint::from(162u32)), || {
        "chain(8,4) != 162".into()
    })?;
    ensure(at_most(6, 3) == Some(BigUint::from(81u32)), || {
        "chain(6,3) != 81".into()
    })?;
    // one locality row left over: 3^(r+1) <= M_3(2(r+1), r+1) only for r <= 5
    for r in 1u64..=20 {
        let fits = at_most(2 * (r + 1), r + 1).unwrap() >= BigUint::from(3u32).pow(r as u32 + 1);
        ensure(fits == (r <= 5), || format!("chain cutoff wrong at r={r}"))?;
    }
    // two rows left over: 3^(r+1) <= M_3(3(r+1), 2(r+1)) only for r <= 2
    for r in 1u64..=20 {
        let fits =
            at_most(3 * (r + 1), 2 * (r + 1)).unwrap() >= BigUint::from(3u32).pow(r as u32 + 1);
        ensure(fits == (r <= 2), || {
            format!("second chain cutoff wrong at r={r}")
        })?;
    }
    Ok("plotkin 6 and 15/2, packing 4, 8/3, 13/3, chain 162 and 81, cutoffs r<=5 and r<=2".into())
}

fn random_code(rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let n = rng.gen_range(2..=10);
        let k = rng.gen_range(n.max(8) - 7..=(n - 1).min(7));
        let data = (0..k * n).map(|_| Gf3::new(rng.gen_range(0..3))).collect();
        let g = Gf3Matrix::new(k, n, data).unwrap();
        if g.rank() == k {
            return LinearCode::from_generator(&g).unwrap();
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize) -> (Vec<usize>, Vec<Gf3>) {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let scales = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Gf3::ONE
            } else {
                Gf3::TWO
            }
        })
        .collect();
    (perm, scales)
}

fn check_properties(code: &LinearCode, rng: &mut ChaCha8Rng, label: &str) -> Result<(), String> {
    let fail = |what: &str| format!("{label}: {what}");
    let n = code.n();

    let d = code
        .min_distance_by_enumeration()
        .map_err(|e| fail(&e.to_string()))?;
    let d2 = code
        .min_distance_by_dependent_columns()
        .map_err(|e| fail(&e.to_string()))?;
    ensure(d == d2, || {
        fail(&format!("distance strategies {d} vs {d2}"))
    })?;

    let locality = code_locality(code).ok();
    let weights = code
        .weight_distribution()
        .map_err(|e| fail(&e.to_string()))?;
    let (perm, scales) = random_monomial(rng, n);
    let image = code
        .apply_monomial(&perm, &scales)
        .map_err(|e| fail(&e.to_string()))?;
    ensure(image.min_distance().unwrap() == d, || {
        fail("distance changed under monomial map")
    })?;
    ensure(image.weight_distribution().unwrap() == weights, || {
        fail("weights changed under monomial map")
    })?;
    let image_locality = code_locality(&image).ok();
    ensure(
        image_locality.as_ref().map(|p| p.code_locality())
            == locality.as_ref().map(|p| p.code_locality()),
        || fail("locality changed under monomial map"),
    )?;
    if let (Some(a), Some(b)) = (&locality, &image_locality) {
        let moved: Vec<usize> = perm.iter().map(|&p| a.per_symbol()[p]).collect();
        ensure(moved == b.per_symbol(), || {
            fail("per-symbol locality not permuted")
        })?;
    }

    if code.k() <= 7 && n - code.k() <= 7 && n <= 14 {
        let mine = code.generalized_hamming_weights().unwrap();
        let dual = code.dual().generalized_hamming_weights().unwrap();
        let mut all: Vec<usize> = mine.weights().to_vec();
        all.extend(dual.weights().iter().map(|&w| n + 1 - w));
        all.sort_unstable();
        ensure(all == (1..=n).collect::<Vec<_>>(), || {
            fail("GHW duality partition broken")
        })?;
    }

    for h in [code.parity_check(), code.generator()] {
        let text = matrix_file::serialize(h);
        let back = matrix_file::parse(&text).map_err(|e| fail(&e.to_string()))?;
        ensure(&back == h && matrix_file::serialize(&back) == text, || {
            fail("matrix file round trip")
        })?;
    }

    let m = BigUint::from(3u32).pow(code.k() as u32);
    if code.k() >= 1 {
        ensure(plotkin_feasible(n as u64, &m, d as u64).unwrap(), || {
            fail("Plotkin violated")
        })?;
    }
    ensure(d <= n - code.k() + 1, || fail("Singleton violated"))?;
    if let Some(p) = &locality {
        let r = p.code_locality();
        if r >= 1 {
            let target = ternary_lrc::bounds::singleton_like_d(n, code.k(), r);
            ensure(d as i64 <= target, || fail("Singleton-like bound violated"))?;
            if let Ok(cover) = build_cover_matrix(code, r) {
                ensure(cover.satisfies_row_count_chain(n, code.k(), r), || {
                    fail("locality row count chain broken")
                })?;
                ensure(cover.stacked().rank() == n - code.k(), || {
                    fail("cover does not span the dual")
                })?;
            }
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e12_a7c3);
    let mut constructed = 0;
    for class in table_instances() {
        let code = construct(&class).map_err(|e| e.to_string())?;
        check_properties(&code, &mut rng, &class.to_string())?;
        constructed += 1;
    }
    for i in 0..1000 {
        let code = random_code(&mut rng);
        check_properties(&code, &mut rng, &format!("random code #{i}"))?;
    }
    Ok(format!("{constructed} constructed and 1000 random codes"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("class table reproduction", table_reproduction),
        ("fixed-matrix spot checks", fixed_matrices),
        ("near-MDS weight hierarchy", near_mds_hierarchy),
        ("nonexistence oracle", nonexistence_oracle),
        ("grid agreement", grid_agreement),
        ("bound suite", bound_suite),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
