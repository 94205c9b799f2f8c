//! Release acceptance suite. Each criterion prints exactly one line,
//! `criterion N: PASS - ...` or `criterion N: FAIL - ...`, and the test
//! fails if any criterion does. Expected values are pinned in the
//! criteria themselves; when a computation disagrees, the line reports
//! both numbers instead of hiding the difference.

use codedist_core::invariants::{
    asymptotic_distance, distance_profile, extended_distance, generalized_covering_radius,
    generalized_radius, greedy_generator, greedy_profile, partial_distances, singleton_profile,
    supercode_distance, supercode_via_radii,
};
use codedist_core::{
    builtin, even_weight, gabidulin, gaussian_binomial, min_distance_via_parity,
    min_ld_cardinality, min_sld_cardinality, reed_solomon, simplex, AmbientSpace, Budget, Field,
    FieldCtx, LinearCode, Metric, SubspaceEnum,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

/// Roomy evaluation budget for desk-scale checks; no single criterion
/// needs more than a tenth of this.
const DESK_BUDGET: u64 = 10_000_000_000;

fn budget() -> Budget {
    Budget::new(DESK_BUDGET)
}

fn field(p: u64, e: u64) -> Field {
    FieldCtx::new(p, e).expect("field parameters are valid")
}

fn hamming(p: u64, e: u64, n: usize) -> AmbientSpace {
    AmbientSpace::hamming(field(p, e), n).expect("ambient parameters are valid")
}

/// The full Hamming space F_{p^e}^n as a code.
fn full_space(p: u64, e: u64, n: usize) -> LinearCode {
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut row = vec![0u32; n];
            row[i] = 1;
            row
        })
        .collect();
    LinearCode::from_rows(hamming(p, e, n), &rows).expect("identity rows span the space")
}

fn named(name: &str) -> LinearCode {
    builtin(name).expect("bundled code exists")
}

/// Distance profile over an inclusive index range; a skipped index is an
/// error here because acceptance budgets are sized to avoid skips.
fn profile_values(
    code: &LinearCode,
    first: usize,
    last: usize,
    budget: &Budget,
) -> Result<Vec<usize>, String> {
    let profile = distance_profile(code, first..=last, budget).map_err(|e| e.to_string())?;
    (first..=last)
        .map(|i| {
            profile.value(i).ok_or_else(|| {
                let reason = profile
                    .skipped
                    .get(&i)
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "missing".into());
                format!("alpha_{i} was skipped: {reason}")
            })
        })
        .collect()
}

/// Records one message per index where the computed profile differs from
/// the pinned one.
fn diff_profile(
    label: &str,
    expected: &[usize],
    got: &[usize],
    first_index: usize,
    bad: &mut Vec<String>,
) {
    if expected.len() != got.len() {
        bad.push(format!(
            "{label}: expected {} values, computed {}",
            expected.len(),
            got.len()
        ));
        return;
    }
    for (offset, (e, g)) in expected.iter().zip(got).enumerate() {
        if e != g {
            bad.push(format!(
                "alpha_{}({label}): expected {e}, computed {g}",
                first_index + offset
            ));
        }
    }
}

fn check_profile(
    label: &str,
    code: &LinearCode,
    first: usize,
    last: usize,
    expected: &[usize],
    budget: &Budget,
    bad: &mut Vec<String>,
) {
    match profile_values(code, first, last, budget) {
        Ok(got) => diff_profile(label, expected, &got, first, bad),
        Err(e) => bad.push(format!("{label}: {e}")),
    }
}

/// A random nonzero code spanned by `k_target` uniform rows. The actual
/// dimension may come out lower when rows collide; that is part of the
/// sampled distribution.
fn random_code(rng: &mut ChaCha8Rng, ambient: &AmbientSpace, k_target: usize) -> LinearCode {
    let q = ambient.field().q;
    loop {
        let rows: Vec<Vec<u32>> = (0..k_target)
            .map(|_| (0..ambient.len()).map(|_| rng.gen_range(0..q)).collect())
            .collect();
        // Only the all-zero draw is rejected; redraw in that case.
        if let Ok(code) = LinearCode::from_rows(ambient.clone(), &rows) {
            return code;
        }
    }
}

fn summarize(bad: &[String]) -> String {
    const SHOW: usize = 8;
    if bad.len() <= SHOW {
        bad.join("; ")
    } else {
        format!(
            "{}; and {} more findings",
            bad[..SHOW].join("; "),
            bad.len() - SHOW
        )
    }
}

fn finish(bad: Vec<String>, pass_detail: String) -> Result<String, String> {
    if bad.is_empty() {
        Ok(pass_detail)
    } else {
        Err(summarize(&bad))
    }
}

/// Command for the compiled binary with the budget environment cleared.
fn cli() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_codedist"));
    cmd.env_remove("CODEDIST_BUDGET");
    cmd
}

fn cli_stdout(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = cli()
        .args(args)
        .output()
        .map_err(|e| format!("running the binary: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "binary exited with {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

/// Criterion 1: Hamming golden profiles, exact match.
fn criterion_1() -> Result<String, String> {
    let b = budget();
    let mut bad = Vec::new();

    check_profile("full binary space n=3", &full_space(2, 1, 3), 1, 3, &[3, 2, 1], &b, &mut bad);
    check_profile("full binary space n=4", &full_space(2, 1, 4), 1, 4, &[4, 2, 2, 1], &b, &mut bad);
    check_profile("ternary-422", &named("ternary-422"), 1, 4, &[4, 2, 2, 1], &b, &mut bad);

    // The two MDS profiles carry a single-core time bound.
    let rs = reed_solomon(&field(3, 2), 4, None).map_err(|e| e.to_string())?;
    let twisted = named("twisted-RS-9-4");
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let (rs_vals, tw_vals) =
        pool.install(|| (profile_values(&rs, 1, 4, &b), profile_values(&twisted, 1, 4, &b)));
    let mds_secs = start.elapsed().as_secs_f64();
    match rs_vals {
        Ok(got) => diff_profile("RS [9,4] over F_9", &[9, 8, 7, 6], &got, 1, &mut bad),
        Err(e) => bad.push(format!("RS [9,4] over F_9: {e}")),
    }
    match tw_vals {
        Ok(got) => diff_profile("twisted-RS-9-4", &[9, 8, 6, 6], &got, 1, &mut bad),
        Err(e) => bad.push(format!("twisted-RS-9-4: {e}")),
    }
    if mds_secs > 120.0 {
        bad.push(format!(
            "RS and twisted profiles took {mds_secs:.1} s on one thread, limit 120"
        ));
    }

    let c1 = named("duality-C1");
    let c2 = named("duality-C2");
    check_profile("duality-C1", &c1, 1, 5, &[4, 2, 2, 2, 1], &b, &mut bad);
    check_profile("duality-C2", &c2, 1, 5, &[4, 2, 2, 2, 1], &b, &mut bad);
    match c1.dual() {
        Ok(d) => check_profile("dual of duality-C1", &d, 1, 5, &[5, 3, 2, 1, 1], &b, &mut bad),
        Err(e) => bad.push(format!("dual of duality-C1: {e}")),
    }
    match c2.dual() {
        Ok(d) => check_profile("dual of duality-C2", &d, 1, 5, &[5, 2, 1, 1, 1], &b, &mut bad),
        Err(e) => bad.push(format!("dual of duality-C2: {e}")),
    }

    let even7 = even_weight(7).map_err(|e| e.to_string())?;
    check_profile("even-weight n=7", &even7, 1, 7, &[6, 4, 2, 2, 2, 2, 1], &b, &mut bad);
    let even8 = even_weight(8).map_err(|e| e.to_string())?;
    check_profile("even-weight n=8", &even8, 1, 8, &[6, 4, 4, 2, 2, 2, 2, 1], &b, &mut bad);

    for k in 2..=4usize {
        let code = simplex(&field(2, 1), k, &b).map_err(|e| e.to_string())?;
        let expected = vec![1usize << (k - 1); k];
        check_profile(&format!("simplex k={k}"), &code, 1, k, &expected, &b, &mut bad);
    }

    finish(
        bad,
        format!("13 profiles exact; RS and twisted profiles in {mds_secs:.1} s on one thread"),
    )
}

/// Criterion 2: rank-metric golden values.
fn criterion_2() -> Result<String, String> {
    let b = budget();
    let mut bad = Vec::new();

    let br = named("BR17-C1");
    match br.min_distance(&b) {
        Ok((4, _)) => {}
        Ok((d, _)) => bad.push(format!("d_min(BR17-C1): expected 4, computed {d}")),
        Err(e) => bad.push(format!("d_min(BR17-C1): {e}")),
    }
    let start = Instant::now();
    match supercode_via_radii(&br, 5, &b) {
        Ok(2) => {}
        Ok(v) => bad.push(format!("alpha_5(BR17-C1) via radii: expected 2, computed {v}")),
        Err(e) => bad.push(format!("alpha_5(BR17-C1) via radii: {e}")),
    }
    let radii_secs = start.elapsed().as_secs_f64();
    if radii_secs > 10.0 {
        bad.push(format!(
            "alpha_5(BR17-C1) via radii took {radii_secs:.1} s, limit 10"
        ));
    }

    let gab = gabidulin(&field(2, 4), 4, 2, None).map_err(|e| e.to_string())?;
    check_profile("Gabidulin 4x4 over F_2", &gab, 5, 8, &[3, 3, 3, 3], &b, &mut bad);

    let f41 = named("F4-C1");
    let f42 = named("F4-C2");
    check_profile("F4-C1", &f41, 1, 4, &[2, 2, 2, 2], &b, &mut bad);
    check_profile("F4-C2", &f42, 1, 4, &[2, 2, 2, 2], &b, &mut bad);
    match f41.dual() {
        Ok(d) => check_profile("dual of F4-C1", &d, 1, 4, &[1, 1, 1, 1], &b, &mut bad),
        Err(e) => bad.push(format!("dual of F4-C1: {e}")),
    }
    match f42.dual() {
        Ok(d) => check_profile("dual of F4-C2", &d, 1, 4, &[2, 2, 2, 2], &b, &mut bad),
        Err(e) => bad.push(format!("dual of F4-C2: {e}")),
    }

    finish(
        bad,
        format!(
            "BR17 alpha_5 via the radii route in {radii_secs:.2} s; Gabidulin and F4 values exact"
        ),
    )
}

/// Criterion 3: direct supercode enumeration equals min(d_min, rho_i) at
/// every supercode index, on random Hamming and rank-metric codes.
fn criterion_3() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE_0003);
    let mut bad = Vec::new();
    let mut indices = 0usize;

    let check_code = |code: &LinearCode, bad: &mut Vec<String>, indices: &mut usize| {
        let b = budget();
        let k = code.k();
        let n = code.len();
        let d = match code.min_distance(&b) {
            Ok((d, _)) => d,
            Err(e) => {
                bad.push(format!("{code}: d_min failed: {e}"));
                return;
            }
        };
        for i in k + 1..=n {
            let direct = match supercode_distance(code, i, &b) {
                Ok(entry) => entry.value,
                Err(e) => {
                    bad.push(format!("{code}: direct alpha_{i} failed: {e}"));
                    continue;
                }
            };
            let rho = match generalized_radius(code, i - k, &b) {
                Ok(r) => r.value,
                Err(e) => {
                    bad.push(format!("{code}: rho_{} failed: {e}", i - k));
                    continue;
                }
            };
            if direct != d.min(rho) {
                bad.push(format!(
                    "{code}: direct alpha_{i} = {direct} but min(d_min, rho_{}) = {}",
                    i - k,
                    d.min(rho)
                ));
            }
            *indices += 1;
        }
    };

    let mut hamming_codes = 0usize;
    while hamming_codes < 200 {
        let q = if rng.gen_bool(0.5) { 2 } else { 3 };
        let n = rng.gen_range(2..=6usize);
        let k_target = rng.gen_range(1..=4usize.min(n - 1));
        let code = random_code(&mut rng, &hamming(q, 1, n), k_target);
        check_code(&code, &mut bad, &mut indices);
        hamming_codes += 1;
    }

    let mut rank_codes = 0usize;
    while rank_codes < 24 {
        let m = if rank_codes % 2 == 0 { 2 } else { 3 };
        let ambient = AmbientSpace::rank(field(2, 1), m, m).map_err(|e| e.to_string())?;
        let k_target = rng.gen_range(1..=m * m - 1);
        let code = random_code(&mut rng, &ambient, k_target);
        check_code(&code, &mut bad, &mut indices);
        rank_codes += 1;
    }

    finish(
        bad,
        format!(
            "{hamming_codes} Hamming and {rank_codes} rank codes, \
             {indices} supercode indices agree with min(d_min, rho_i)"
        ),
    )
}

/// Criterion 4: structural properties on random codes across all three
/// metrics: monotonicity, endpoints, greedy domination and forced
/// equalities, attained-weight membership and extremality, Singleton
/// ceilings, puncturing drop at most one, the parity-check route, and
/// double duality.
fn criterion_4() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE_0004);
    let mut bad = Vec::new();
    let mut hamming_codes = 0usize;
    let mut rank_codes = 0usize;
    let mut sum_rank_codes = 0usize;
    let mut puncturings = 0usize;
    let mut double_duals = 0usize;
    let mut dependence_sets = 0usize;

    for trial in 0..520usize {
        let ambient = match trial % 13 {
            0..=7 => {
                let (p, e) = [(2, 1), (3, 1), (2, 2)][rng.gen_range(0..3usize)];
                let n = rng.gen_range(2..=6usize);
                hamming_codes += 1;
                hamming(p, e, n)
            }
            8..=10 => {
                let (m, n) = [(2, 2), (2, 3), (3, 2)][rng.gen_range(0..3usize)];
                let p = if rng.gen_bool(0.5) { 2 } else { 3 };
                rank_codes += 1;
                AmbientSpace::rank(field(p, 1), m, n).map_err(|e| e.to_string())?
            }
            _ => {
                let blocks = [
                    vec![(1, 2), (2, 2)],
                    vec![(1, 1), (2, 2)],
                    vec![(1, 2), (1, 2)],
                ][rng.gen_range(0..3usize)]
                    .clone();
                let p = if rng.gen_bool(0.5) { 2 } else { 3 };
                sum_rank_codes += 1;
                AmbientSpace::sum_rank(field(p, 1), blocks).map_err(|e| e.to_string())?
            }
        };
        let k_target = rng.gen_range(1..=ambient.len());
        let code = random_code(&mut rng, &ambient, k_target);
        let b = budget();
        let n = code.len();
        let k = code.k();

        let profile = match profile_values(&code, 1, n, &b) {
            Ok(p) => p,
            Err(e) => {
                bad.push(format!("{code}: profile failed: {e}"));
                continue;
            }
        };
        if profile.windows(2).any(|w| w[0] < w[1]) {
            bad.push(format!("{code}: profile {profile:?} is not non-increasing"));
        }

        let d = match code.min_distance(&b) {
            Ok((d, _)) => d,
            Err(e) => {
                bad.push(format!("{code}: d_min failed: {e}"));
                continue;
            }
        };
        let maxwt = match code.max_weight(&b) {
            Ok((w, _)) => w,
            Err(e) => {
                bad.push(format!("{code}: max weight failed: {e}"));
                continue;
            }
        };
        if profile[0] != maxwt {
            bad.push(format!(
                "{code}: alpha_1 = {} differs from the maximum weight {maxwt}",
                profile[0]
            ));
        }
        if profile[k - 1] != d {
            bad.push(format!(
                "{code}: alpha_k = {} differs from d_min = {d}",
                profile[k - 1]
            ));
        }
        if profile[n - 1] != 1 {
            bad.push(format!("{code}: alpha_N = {} instead of 1", profile[n - 1]));
        }

        match greedy_profile(&code, &b, 1_000_000) {
            Ok(g) => {
                for i in 1..=n {
                    if g.values[i - 1] > profile[i - 1] {
                        bad.push(format!(
                            "{code}: greedy alpha_{i} = {} exceeds alpha_{i} = {}",
                            g.values[i - 1],
                            profile[i - 1]
                        ));
                    }
                }
                for i in [1, k, (k + 1).min(n), n] {
                    if g.values[i - 1] != profile[i - 1] {
                        bad.push(format!(
                            "{code}: greedy alpha_{i} = {} must equal alpha_{i} = {}",
                            g.values[i - 1],
                            profile[i - 1]
                        ));
                    }
                }
            }
            Err(e) => bad.push(format!("{code}: greedy profile failed: {e}")),
        }

        match code.sld_set(&b) {
            Ok(weights) => {
                for i in 1..=k {
                    if !weights.contains(&profile[i - 1]) {
                        bad.push(format!(
                            "{code}: alpha_{i} = {} is not an attained weight",
                            profile[i - 1]
                        ));
                    }
                }
                if weights.iter().next_back() != Some(&profile[0]) {
                    bad.push(format!("{code}: largest attained weight is not alpha_1"));
                }
                if weights.iter().next() != Some(&d) {
                    bad.push(format!("{code}: smallest attained weight is not d_min"));
                }
            }
            Err(e) => bad.push(format!("{code}: attained weights failed: {e}")),
        }

        let ceilings = singleton_profile(&code, Some(d)).ceilings;
        for i in 1..=n {
            if profile[i - 1] > ceilings[i - 1] {
                bad.push(format!(
                    "{code}: alpha_{i} = {} exceeds its Singleton ceiling {}",
                    profile[i - 1],
                    ceilings[i - 1]
                ));
            }
        }

        if trial % 4 == 0 {
            let t = rng.gen_range(2..=n + 1);
            let vectors: Vec<Vec<u32>> = (0..t)
                .map(|_| {
                    (0..n)
                        .map(|_| rng.gen_range(0..ambient.field().q))
                        .collect()
                })
                .collect();
            let ld = min_ld_cardinality(ambient.field(), &vectors, &b);
            let sld = min_sld_cardinality(ambient.field(), &vectors, &b);
            match (ld, sld) {
                (Ok(a), Ok(c)) if a == c => dependence_sets += 1,
                (Err(_), Err(_)) => dependence_sets += 1,
                (a, c) => bad.push(format!(
                    "{t} vectors over F_{}: minimal dependent size {a:?} \
                     differs from minimal strongly dependent size {c:?}",
                    ambient.field().q
                )),
            }
        }

        if code.ambient().metric() == Metric::Hamming {
            if n >= 2 {
                let position = rng.gen_range(0..n);
                // A puncturing can collapse to the zero code; only actual
                // codes are comparable.
                if let Ok(punctured) = code.puncture(position) {
                    match profile_values(&punctured, 1, n - 1, &b) {
                        Ok(pp) => {
                            puncturings += 1;
                            for i in 1..=n - 1 {
                                if pp[i - 1] + 1 < profile[i - 1] {
                                    bad.push(format!(
                                        "{code}: puncturing at {position} dropped alpha_{i} \
                                         from {} to {}",
                                        profile[i - 1],
                                        pp[i - 1]
                                    ));
                                }
                            }
                        }
                        Err(e) => bad.push(format!("{code}: punctured profile failed: {e}")),
                    }
                }
            }

            match code
                .parity_check()
                .and_then(|h| min_distance_via_parity(&h, &b))
            {
                Ok(pd) => {
                    if pd != d {
                        bad.push(format!(
                            "{code}: parity-check route gives {pd}, scan gives {d}"
                        ));
                    }
                }
                Err(e) => bad.push(format!("{code}: parity-check route failed: {e}")),
            }

            if k < n {
                match code.dual().and_then(|dual| dual.dual()) {
                    Ok(dd) => {
                        double_duals += 1;
                        let same = dd.generator().nrows() == code.generator().nrows()
                            && dd.generator().data() == code.generator().data();
                        if !same {
                            bad.push(format!("{code}: the double dual is a different code"));
                        }
                    }
                    Err(e) => bad.push(format!("{code}: double dual failed: {e}")),
                }
            }
        }
    }

    finish(
        bad,
        format!(
            "{hamming_codes} Hamming, {rank_codes} rank, and {sum_rank_codes} sum-rank codes \
             passed every property ({puncturings} puncturings, {double_duals} double duals, \
             {dependence_sets} dependence comparisons)"
        ),
    )
}

/// Criterion 5: the greedy generator realizes the greedy profile row by
/// row, and its partial distances reproduce the same sequence.
fn criterion_5() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE_0005);
    let mut bad = Vec::new();
    let mut rows_checked = 0usize;
    let mut codes = 0usize;

    while codes < 100 {
        let n = rng.gen_range(2..=7usize);
        let k_target = rng.gen_range(1..=n);
        let code = random_code(&mut rng, &hamming(2, 1, n), k_target);
        let b = budget();
        let k = code.k();

        let greedy = match greedy_profile(&code, &b, 1_000_000) {
            Ok(g) => g.values,
            Err(e) => {
                bad.push(format!("{code}: greedy profile failed: {e}"));
                codes += 1;
                continue;
            }
        };
        let generator = match greedy_generator(&code, &b, 1_000_000) {
            Ok(m) => m,
            Err(e) => {
                bad.push(format!("{code}: greedy generator failed: {e}"));
                codes += 1;
                continue;
            }
        };
        for i in 1..=k {
            let w = code.weight(generator.row(i - 1));
            if w != greedy[i - 1] {
                bad.push(format!(
                    "{code}: generator row {i} weighs {w}, greedy alpha_{i} is {}",
                    greedy[i - 1]
                ));
            }
            rows_checked += 1;
        }
        match partial_distances(&generator, code.ambient(), &b) {
            Ok(pd) => {
                if pd.deltas != greedy[..k] {
                    bad.push(format!(
                        "{code}: partial distances {:?} differ from greedy values {:?}",
                        pd.deltas,
                        &greedy[..k]
                    ));
                }
            }
            Err(e) => bad.push(format!("{code}: partial distances failed: {e}")),
        }
        codes += 1;
    }

    finish(
        bad,
        format!(
            "{codes} binary codes: {rows_checked} generator rows carry the greedy weights \
             and partial distances reproduce the greedy sequence"
        ),
    )
}

/// Criterion 6: extension golden values, invariance of d_min under
/// extension, and the extended radius law alpha_(k+1)^l = min(d_min, R_l).
fn criterion_6() -> Result<String, String> {
    let b = budget();
    let mut bad = Vec::new();

    let even3 = even_weight(3).map_err(|e| e.to_string())?;
    let c1 = named("duality-C1");
    let c2 = named("duality-C2");
    for (label, code, index, level, expected) in [
        ("even-weight n=3", &even3, 1usize, 2usize, 3usize),
        ("duality-C1", &c1, 1, 2, 5),
        ("duality-C2", &c2, 1, 2, 4),
    ] {
        match extended_distance(code, level, index, &b) {
            Ok(v) if v == expected => {}
            Ok(v) => bad.push(format!(
                "alpha_{index}^{level}({label}): expected {expected}, computed {v}"
            )),
            Err(e) => bad.push(format!("alpha_{index}^{level}({label}): {e}")),
        }
    }

    let rs = reed_solomon(&field(3, 2), 4, None).map_err(|e| e.to_string())?;
    let gab = gabidulin(&field(2, 4), 4, 2, None).map_err(|e| e.to_string())?;
    let goldens: Vec<(String, LinearCode)> = vec![
        ("full binary space n=3".into(), full_space(2, 1, 3)),
        ("full binary space n=4".into(), full_space(2, 1, 4)),
        ("ternary-422".into(), named("ternary-422")),
        ("RS [9,4] over F_9".into(), rs),
        ("twisted-RS-9-4".into(), named("twisted-RS-9-4")),
        ("duality-C1".into(), c1.clone()),
        ("duality-C2".into(), c2.clone()),
        (
            "dual of duality-C1".into(),
            c1.dual().map_err(|e| e.to_string())?,
        ),
        (
            "dual of duality-C2".into(),
            c2.dual().map_err(|e| e.to_string())?,
        ),
        ("even-weight n=7".into(), even_weight(7).map_err(|e| e.to_string())?),
        ("even-weight n=8".into(), even_weight(8).map_err(|e| e.to_string())?),
        (
            "simplex k=2".into(),
            simplex(&field(2, 1), 2, &b).map_err(|e| e.to_string())?,
        ),
        (
            "simplex k=3".into(),
            simplex(&field(2, 1), 3, &b).map_err(|e| e.to_string())?,
        ),
        (
            "simplex k=4".into(),
            simplex(&field(2, 1), 4, &b).map_err(|e| e.to_string())?,
        ),
        ("BR17-C1".into(), named("BR17-C1")),
        ("Gabidulin 4x4 over F_2".into(), gab),
        ("F4-C1".into(), named("F4-C1")),
        ("F4-C2".into(), named("F4-C2")),
    ];
    let mut invariance_pairs = 0usize;
    for (label, code) in &goldens {
        let d = match code.min_distance(&b) {
            Ok((d, _)) => d,
            Err(e) => {
                bad.push(format!("{label}: d_min failed: {e}"));
                continue;
            }
        };
        let k = code.k();
        for level in 2..=3usize {
            match extended_distance(code, level, k, &b) {
                Ok(v) if v == d => invariance_pairs += 1,
                Ok(v) => bad.push(format!(
                    "alpha_k^{level}({label}): expected d_min = {d}, computed {v}"
                )),
                Err(e) => bad.push(format!("alpha_k^{level}({label}): {e}")),
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xC0DE_0006);
    let mut law_checked = 0usize;
    while law_checked < 50 {
        let n = rng.gen_range(2..=5usize);
        let k_target = rng.gen_range(1..=n - 1);
        let code = random_code(&mut rng, &hamming(2, 1, n), k_target);
        let law_budget = Budget::new(2_000_000_000);
        let k = code.k();
        let d = match code.min_distance(&law_budget) {
            Ok((d, _)) => d,
            Err(e) => {
                bad.push(format!("{code}: d_min failed: {e}"));
                law_checked += 1;
                continue;
            }
        };
        let radius = match generalized_covering_radius(&code, 2, &law_budget) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{code}: R_2 failed: {e}"));
                law_checked += 1;
                continue;
            }
        };
        match extended_distance(&code, 2, k + 1, &law_budget) {
            Ok(v) => {
                if v != d.min(radius) {
                    bad.push(format!(
                        "{code}: alpha_(k+1)^2 = {v} but min(d_min, R_2) = {}",
                        d.min(radius)
                    ));
                }
            }
            Err(e) => bad.push(format!("{code}: alpha_(k+1)^2 failed: {e}")),
        }
        law_checked += 1;
    }

    finish(
        bad,
        format!(
            "extension goldens exact; d_min invariant under extension in {invariance_pairs} \
             code-level pairs; the extended radius law holds on {law_checked} random codes"
        ),
    )
}

/// Criterion 7: the subspace enumerator visits exactly the Gaussian
/// binomial count, and parallel CLI runs are byte-identical to serial.
fn criterion_7() -> Result<String, String> {
    let mut bad = Vec::new();
    let mut enumerations = 0usize;

    for (p, e) in [(2u64, 1u64), (3, 1), (2, 2)] {
        let f = field(p, e);
        for dim in 1..=5usize {
            for i in 0..=dim {
                let en = match SubspaceEnum::new(f.clone(), dim, i) {
                    Ok(en) => en,
                    Err(err) => {
                        bad.push(format!(
                            "enumerator for dimension {i} in F_{}^{dim}: {err}",
                            f.q
                        ));
                        continue;
                    }
                };
                let mut seen: u128 = 0;
                let mut malformed = 0usize;
                for chunk in en.chunks(1 << 20) {
                    en.visit_chunk(&chunk, |_, basis| {
                        seen += 1;
                        if basis.nrows() != i || basis.ncols() != dim {
                            malformed += 1;
                        }
                        Ok(())
                    })
                    .expect("counting visitor is infallible");
                }
                let expected =
                    gaussian_binomial(dim, i, f.q as u64).map_err(|e| e.to_string())?;
                if seen != expected || en.count() != expected {
                    bad.push(format!(
                        "subspaces of dimension {i} in F_{}^{dim}: visited {seen}, \
                         counted {}, Gaussian binomial {expected}",
                        f.q,
                        en.count()
                    ));
                }
                if malformed > 0 {
                    bad.push(format!(
                        "{malformed} bases of dimension {i} in F_{}^{dim} had the wrong shape",
                        f.q
                    ));
                }
                enumerations += 1;
            }
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("br17.code");
    let path_str = path.to_str().expect("temp path is valid UTF-8");
    cli_stdout(&["construct", "builtin", "BR17-C1", "--out", path_str])?;
    let args = ["invariants", path_str, "--alpha", "4..5", "--sld", "--output", "json"];
    let serial = cli_stdout(&[&args[..], &["--workers", "1"]].concat())?;
    let parallel = cli_stdout(&[&args[..], &["--workers", "4"]].concat())?;
    if serial != parallel {
        bad.push("a four-worker run changed the JSON report bytes".into());
    }

    finish(
        bad,
        format!("{enumerations} enumerations match the Gaussian binomial; parallel JSON is byte-identical"),
    )
}

/// Criterion 8: extension values sit between the base distance and the
/// swept maximum, and every asymptotic sweep is reported as uncertified,
/// in the library and in the CLI output.
fn criterion_8() -> Result<String, String> {
    let b = budget();
    let mut bad = Vec::new();
    let mut sandwiches = 0usize;

    let codes: Vec<(&str, LinearCode)> = vec![
        ("duality-C1", named("duality-C1")),
        ("ternary-422", named("ternary-422")),
        ("even-weight n=4", even_weight(4).map_err(|e| e.to_string())?),
    ];
    for (label, code) in &codes {
        let n = code.len();
        let profile = match profile_values(code, 1, n, &b) {
            Ok(p) => p,
            Err(e) => {
                bad.push(format!("{label}: profile failed: {e}"));
                continue;
            }
        };
        for i in 1..=n {
            let sweep = match asymptotic_distance(code, i, 3, &b) {
                Ok(s) => s,
                Err(e) => {
                    bad.push(format!("{label}: sweep at index {i} failed: {e}"));
                    continue;
                }
            };
            if sweep.certified {
                bad.push(format!(
                    "{label}: the sweep at index {i} claims certainty, which no finite sweep has"
                ));
            }
            for level in 2..=3usize {
                let extended = match extended_distance(code, level, i, &b) {
                    Ok(v) => v,
                    Err(e) => {
                        bad.push(format!("alpha_{i}^{level}({label}): {e}"));
                        continue;
                    }
                };
                if profile[i - 1] > extended || extended > sweep.value {
                    bad.push(format!(
                        "{label}: alpha_{i} = {}, alpha_{i}^{level} = {extended}, \
                         swept max = {}: sandwich violated",
                        profile[i - 1],
                        sweep.value
                    ));
                }
                sandwiches += 1;
            }
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("duality-c1.code");
    let path_str = path.to_str().expect("temp path is valid UTF-8");
    cli_stdout(&["construct", "builtin", "duality-C1", "--out", path_str])?;
    let report = cli_stdout(&["invariants", path_str, "--alpha", "1", "--asymptotic", "2"])?;
    if !String::from_utf8_lossy(&report).contains("uncertified") {
        bad.push("the CLI asymptotic report lacks the uncertified marker".into());
    }

    finish(
        bad,
        format!("{sandwiches} sandwich checks hold, every sweep and the CLI report say uncertified"),
    )
}

struct Outcome {
    number: usize,
    name: &'static str,
    result: Result<String, String>,
}

fn run_criterion(number: usize, name: &'static str, f: fn() -> Result<String, String>) -> Outcome {
    let result = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic with a non-string payload".into());
            Err(format!("panicked: {message}"))
        }
    };
    Outcome { number, name, result }
}

#[test]
fn acceptance() {
    let outcomes = vec![
        run_criterion(1, "golden Hamming profiles", criterion_1),
        run_criterion(2, "golden rank-metric values", criterion_2),
        run_criterion(3, "supercode distances equal min(d_min, rho_i)", criterion_3),
        run_criterion(4, "random-code property suite", criterion_4),
        run_criterion(5, "greedy generator realization", criterion_5),
        run_criterion(6, "extension goldens and the extended radius law", criterion_6),
        run_criterion(7, "enumerator exactness and parallel determinism", criterion_7),
        run_criterion(8, "extension sandwich and the uncertified marker", criterion_8),
    ];

    let mut failures = 0usize;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(detail) => {
                println!("criterion {}: PASS - {} - {detail}", outcome.number, outcome.name);
            }
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL - {} - {detail}", outcome.number, outcome.name);
            }
        }
    }

    assert_eq!(
        failures,
        0,
        "{failures} of {} acceptance criteria failed; the lines above carry the details",
        outcomes.len()
    );
}
