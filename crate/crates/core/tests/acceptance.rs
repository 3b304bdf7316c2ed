//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed; exits nonzero when any
//! criterion fails.

mod oracle;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oracle::Mask;
use softrough::verify::sweep::{check_biconditionals, enumerate_coverings, random_covering, CoveringSource};
use softrough::verify::{check_partition_coincidence, check_property, evaluate_at, revalidate, Mode, Status};
use softrough::{
    generate_from_subbase, lower_fixed_point_family, parse_space, upper_fixed_point_family, ExhaustiveLimit,
    PropertyId, SoftCoveringSpace, SoftSet, Subset, TopologyViolation, Universe,
};

const LIMIT: ExhaustiveLimit = ExhaustiveLimit::DEFAULT;

// pinned limits
const SUBBASE_BUDGET: Duration = Duration::from_secs(1);
const BASIC_LAWS_BUDGET: Duration = Duration::from_secs(60);
const BICONDITIONAL_BUDGET: Duration = Duration::from_secs(300);
const RANDOM_COVERINGS: usize = 200;
const RANDOM_MAX_SIZE: usize = 10;
const SAMPLED_FOUR_POINT: usize = 2_000;
const ROUND_TRIPS: usize = 500;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn data(name: &str) -> SoftCoveringSpace {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    parse_space(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn spaces_a_to_d() -> Vec<(&'static str, SoftCoveringSpace)> {
    ["a", "b", "c", "d"]
        .into_iter()
        .map(|k| (k, data(&format!("space_{k}.json"))))
        .collect()
}

fn set(space: &SoftCoveringSpace, text: &str) -> Subset {
    Subset::parse(space.universe(), text).unwrap()
}

fn blocks(space: &SoftCoveringSpace) -> Vec<Mask> {
    space.soft_set().assignment().map(|(_, s)| s.bits()).collect()
}

fn random_spaces(count: usize, max_size: usize, seed: u64) -> Vec<SoftCoveringSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universes: Vec<Arc<Universe>> = (1..=max_size).map(|n| Universe::numbered("u", n).unwrap()).collect();
    (0..count)
        .map(|_| {
            let u = &universes[rng.gen_range(0..max_size)];
            random_covering(&mut rng, u, u.len() + 2)
        })
        .collect()
}

fn subbase_topology_of_space_c() -> Check {
    let c = data("space_c.json");
    let started = Instant::now();
    let tau = generate_from_subbase(&c);
    let elapsed = started.elapsed();
    let expected = [
        "{}",
        "{h1,h2,h3,h4,h5}",
        "{h1,h2,h3,h4}",
        "{h3,h4,h5}",
        "{h1,h2,h3}",
        "{h3,h4}",
        "{h4,h5}",
        "{h3}",
        "{h4}",
    ];
    let mut got: Vec<String> = tau.opens().iter().map(|s| s.to_string()).collect();
    let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    got.sort();
    want.sort();
    ensure(got == want, || format!("opens {got:?}"))?;
    ensure(elapsed < SUBBASE_BUDGET, || format!("took {elapsed:?}"))?;
    let oracle_opens = oracle::subbase_topology(&blocks(&c), 5);
    ensure(tau.opens().bits() == oracle_opens.as_slice(), || "oracle disagrees".into())?;
    Ok(format!("9 open sets, {elapsed:?}"))
}

fn approximations_against_topology() -> Check {
    let c = data("space_c.json");
    let tau = generate_from_subbase(&c);
    let x = set(&c, "h2,h3,h4");
    let y = set(&c, "h1,h4,h5");
    let mut computed = Vec::new();
    for z in [&x, &y] {
        let r = c.regions(z).unwrap();
        computed.push(r.lower.to_string());
        computed.push(r.upper.to_string());
        computed.push(r.boundary.to_string());
        computed.push(tau.interior(z).unwrap().to_string());
        computed.push(tau.closure(z).unwrap().to_string());
        computed.push(tau.boundary(z).unwrap().to_string());
    }
    let expected = [
        "{h3,h4}",
        "{h1,h2,h3,h4}",
        "{h1,h2}",
        "{h3,h4}",
        "{h1,h2,h3,h4,h5}",
        "{h1,h2,h5}",
        "{h4,h5}",
        "{h1,h2,h3,h4,h5}",
        "{h1,h2,h3}",
        "{h4,h5}",
        "{h1,h2,h4,h5}",
        "{h1,h2}",
    ];
    ensure(computed == expected, || format!("computed {computed:?}"))?;
    let upper_x = c.upper(&x).unwrap();
    let cl_x = tau.closure(&x).unwrap();
    let upper_y = c.upper(&y).unwrap();
    let cl_y = tau.closure(&y).unwrap();
    let strict = |a: &Subset, b: &Subset| a.is_subset(b).unwrap() && a != b;
    ensure(strict(&upper_x, &cl_x), || "S^-(X) ⊂ cl(X) fails".into())?;
    ensure(strict(&cl_y, &upper_y), || "cl(Y) ⊂ S^-(Y) fails".into())?;
    Ok("12 sets match; S^-(X) ⊂ cl(X), cl(Y) ⊂ S^-(Y)".into())
}

fn partition_coincidence() -> Check {
    let d = data("space_d.json");
    let tau = generate_from_subbase(&d);
    let x = set(&d, "h1,h2,h3");
    let r = d.regions(&x).unwrap();
    ensure(r.lower == set(&d, "h1,h2") && tau.interior(&x).unwrap() == r.lower, || format!("lower {}", r.lower))?;
    ensure(
        r.upper == set(&d, "h1,h2,h3,h4") && tau.closure(&x).unwrap() == r.upper,
        || format!("upper {}", r.upper),
    )?;
    ensure(
        r.boundary == set(&d, "h3,h4") && tau.boundary(&x).unwrap() == r.boundary,
        || format!("boundary {}", r.boundary),
    )?;
    let report = check_partition_coincidence(&d, LIMIT).map_err(|e| e.to_string())?;
    ensure(report.examined == 128 && report.disagreements.is_empty(), || {
        format!("{} disagreements", report.disagreements.len())
    })?;
    // independent check of all three operator pairs
    let b = blocks(&d);
    let classes = oracle::partition_classes(&b, 7).ok_or("not a partition")?;
    let opens = oracle::subbase_topology(&b, 7);
    for x in 0..128 {
        let (l, u) = (oracle::lower(&b, x), oracle::upper(&b, 7, x));
        let (i, c) = (oracle::interior(&opens, x), oracle::closure(&opens, 7, x));
        let agree = l == oracle::pawlak_lower(&classes, x)
            && u == oracle::pawlak_upper(&classes, x)
            && l == i
            && u == c
            && (u & !l) == (c & !i);
        let s = Subset::from_bits(d.universe(), x);
        let lib = (d.lower(&s).unwrap().bits(), d.upper(&s).unwrap().bits());
        ensure(agree && lib == (l, u), || format!("disagreement at mask {x}"))?;
    }
    Ok("example values match; 128/128 subsets agree".into())
}

fn basic_laws() -> Check {
    let started = Instant::now();
    let mut spaces: Vec<SoftCoveringSpace> = spaces_a_to_d().into_iter().map(|(_, s)| s).collect();
    spaces.extend(random_spaces(RANDOM_COVERINGS, RANDOM_MAX_SIZE, 14));
    let mut checks = 0;
    for space in &spaces {
        let n = space.universe().len();
        let b = blocks(space);
        // the operators under test agree with the definitions everywhere
        for x in 0..=oracle::full(n) {
            let s = Subset::from_bits(space.universe(), x);
            ensure(
                space.lower(&s).unwrap().bits() == oracle::lower(&b, x)
                    && space.upper(&s).unwrap().bits() == oracle::upper(&b, n, x),
                || format!("operator mismatch on a {n}-element space"),
            )?;
        }
        for p in PropertyId::BASIC_LAWS {
            let out = check_property(space, p, Mode::Exhaustive, LIMIT).map_err(|e| e.to_string())?;
            checks += 1;
            ensure(out.status == Status::HoldsExhaustive, || format!("{p} fails: {:?}", out.witness))?;
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed < BASIC_LAWS_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{} spaces, {checks} exhaustive checks, 0 violations, {elapsed:?}", spaces.len()))
}

fn failing_laws() -> Check {
    let b = data("space_b.json");
    let pairs: [(PropertyId, &str, &str); 7] = [
        (PropertyId::LowerMeetDistributive, "a,b,c,d", "d,e"),
        (PropertyId::UpperJoinDistributive, "a,b", "c,d"),
        (PropertyId::UpperMonotone, "d", "b,c,d"),
        (PropertyId::LowerDualOfUpper, "a,b,c,d", "d,e"),
        (PropertyId::UpperDualOfLower, "a,b,c,d", "d,e"),
        (PropertyId::LowerComplementFixed, "a,b,c,d", "d,e"),
        (PropertyId::UpperComplementFixed, "a,b,c,d", "d,e"),
    ];
    for (p, x, y) in pairs {
        let found = check_property(&b, p, Mode::Exhaustive, LIMIT).map_err(|e| e.to_string())?;
        ensure(found.status == Status::Fails, || format!("no witness for {p}"))?;
        let w = found.witness.as_ref().unwrap();
        ensure(revalidate(&b, p, w), || format!("{p} witness {w} does not re-validate"))?;
        let at = evaluate_at(&b, p, &set(&b, x), Some(&set(&b, y))).map_err(|e| e.to_string())?;
        let at = at.ok_or_else(|| format!("{p} holds at X={{{x}}}, Y={{{y}}}"))?;
        ensure(revalidate(&b, p, &at), || format!("{p} example witness does not re-validate"))?;
    }
    Ok("7/7 laws fail with re-validated witnesses; example pairs admissible".into())
}

fn biconditionals() -> Check {
    let started = Instant::now();
    let mut families: Vec<(usize, Vec<Mask>)> = oracle::all_coverings(3).into_iter().map(|f| (3, f)).collect();
    let exhaustive = families.len();
    let four = Universe::numbered("u", 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..SAMPLED_FOUR_POINT {
        families.push((4, blocks(&random_covering(&mut rng, &four, 6))));
    }
    let mut violations = Vec::new();
    let mut closed_count = 0;
    for (n, b) in &families {
        let closed = oracle::intersection_union_closed(b);
        closed_count += closed as usize;
        let meet = oracle::meet_distributive(b, *n);
        let join = oracle::join_distributive(b, *n);
        let mono = oracle::upper_monotone(b, *n);
        for (label, lhs, rhs) in [("T20", closed, meet), ("T21", mono, closed), ("T22", mono, join), ("C23", join, closed)] {
            if lhs != rhs {
                violations.push(format!("{label} on {b:?}"));
            }
        }
    }
    ensure(violations.is_empty(), || format!("oracle violations: {violations:?}"))?;

    // the library's biconditional checker agrees with the oracle
    let all3 = check_biconditionals(CoveringSource::All { size: 3, max_blocks: None }, LIMIT).map_err(|e| e.to_string())?;
    ensure(all3.spaces as usize == exhaustive && all3.violations.is_empty(), || {
        format!("library sweep: {} spaces, {} violations", all3.spaces, all3.violations.len())
    })?;
    let sampled = check_biconditionals(
        CoveringSource::Random { count: SAMPLED_FOUR_POINT, seed: 20, min_size: 4, max_size: 4, max_blocks: 6 },
        LIMIT,
    )
    .map_err(|e| e.to_string())?;
    ensure(sampled.violations.is_empty(), || format!("{} sampled violations", sampled.violations.len()))?;
    let elapsed = started.elapsed();
    ensure(elapsed < BICONDITIONAL_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{exhaustive} coverings of 3 points (all) + {SAMPLED_FOUR_POINT} of 4 points, {closed_count} closed, 0 violations, {elapsed:?}"
    ))
}

fn fixed_point_structure() -> Check {
    let c = data("space_c.json");
    let lower = lower_fixed_point_family(&c, LIMIT).map_err(|e| e.to_string())?;
    let unions = oracle::all_block_unions(&blocks(&c));
    ensure(unions.len() == 8, || format!("{} subfamily unions", unions.len()))?;
    let mut distinct = unions.clone();
    distinct.sort_unstable();
    distinct.dedup();
    ensure(lower.opens().bits() == distinct.as_slice(), || format!("family {}", lower.opens()))?;
    let check = lower.is_topology(LIMIT).map_err(|e| e.to_string())?;
    match &check.violation {
        Some(TopologyViolation::Intersection { result, .. }) if result.to_string() == "{h3}" => {}
        other => return Err(format!("unexpected check {other:?}")),
    }

    let mut closed_spaces = 0;
    let mut examined = 0;
    for n in 1..=4 {
        let u = Universe::numbered("u", n).unwrap();
        for space in enumerate_coverings(&u, None).map_err(|e| e.to_string())? {
            examined += 1;
            if !space.is_intersection_union_closed().holds {
                continue;
            }
            closed_spaces += 1;
            let lf = lower_fixed_point_family(&space, LIMIT).map_err(|e| e.to_string())?;
            let uf = upper_fixed_point_family(&space, LIMIT).map_err(|e| e.to_string())?;
            let b = blocks(&space);
            ensure(
                lf.is_topology(LIMIT).unwrap().holds
                    && uf.is_topology(LIMIT).unwrap().holds
                    && lf.opens() == uf.opens()
                    && oracle::is_topology(lf.opens().bits(), n)
                    && lf.opens().bits() == oracle::upper_fixed(&b, n).as_slice(),
                || format!("fixed families differ or fail on {}", space.cover()),
            )?;
        }
    }
    Ok(format!(
        "space C: {} distinct of 8 block unions, fails at {{h3}}; {closed_spaces}/{examined} enumerated spaces closed, all pass",
        distinct.len()
    ))
}

fn lower_inside_interior() -> Check {
    let mut spaces: Vec<SoftCoveringSpace> = spaces_a_to_d().into_iter().map(|(_, s)| s).collect();
    spaces.extend(random_spaces(RANDOM_COVERINGS, RANDOM_MAX_SIZE, 28));
    let mut subsets = 0u64;
    for space in &spaces {
        let n = space.universe().len();
        let b = blocks(space);
        let opens = oracle::subbase_topology(&b, n);
        for x in 0..=oracle::full(n) {
            subsets += 1;
            ensure(oracle::subset(oracle::lower(&b, x), oracle::interior(&opens, x)), || {
                format!("oracle violation at mask {x}")
            })?;
        }
        let out = check_property(space, PropertyId::LowerInsideInterior, Mode::Exhaustive, LIMIT)
            .map_err(|e| e.to_string())?;
        ensure(out.status == Status::HoldsExhaustive, || format!("library reports {:?}", out.witness))?;
    }
    Ok(format!("{} spaces, {subsets} subsets, 0 violations", spaces.len()))
}

fn relation_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..ROUND_TRIPS {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(1..=6);
        let u = Universe::numbered("u", n).unwrap();
        let images: Vec<Mask> = (0..m).map(|_| rng.gen::<Mask>() & oracle::full(n)).collect();
        let soft = SoftSet::from_bits(&u, images.iter().copied());
        let relation = soft.induced_relation();
        // the relation holds exactly the pairs (e, x) with x ∈ F(e)
        let pairs: usize = images.iter().map(|b| b.count_ones() as usize).sum();
        ensure(relation.len() == pairs, || format!("case {i}: {} pairs", relation.len()))?;
        let back = SoftSet::from_relation(&relation);
        ensure(back == soft, || format!("case {i}: round trip changed the soft set"))?;
    }
    Ok(format!("{ROUND_TRIPS}/{ROUND_TRIPS} identities"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 subbase topology of space C", subbase_topology_of_space_c),
        ("2 approximations vs interior/closure on space C", approximations_against_topology),
        ("3 partition space D coincidence", partition_coincidence),
        ("4 basic laws on A-D and random coverings", basic_laws),
        ("5 failing laws on space B", failing_laws),
        ("6 biconditionals over small coverings", biconditionals),
        ("7 fixed-point families", fixed_point_structure),
        ("8 lower approximation inside interior", lower_inside_interior),
        ("9 soft set / relation round trip", relation_round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(reason) => {
                failed += 1;
                println!("criterion {name}: FAIL ({reason})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
