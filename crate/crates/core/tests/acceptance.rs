//! Exit criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p hatgame --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use hatgame::analysis::{
    exhaustive_worst_case_with, identity_check, lower_bound_loss, monte_carlo, robbins_check, sample_no_peek,
    search_optimal, total_correct_over_omega, RedCount,
};
use hatgame::game::{HatDistribution, PlayerSet, Strategy, VisibleView};
use hatgame::strategies::{
    guarantee_bound, lemma_table_bound, make_partition, CompositeStrategy, MajorityStrategy, Pairing,
    PairingStrategy, PartialParams, PartialStrategy,
};
use hatgame::Color;
use num_bigint::BigUint;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, budget {limit:?}"))
}

fn c1_pairing_exactness() -> Outcome {
    let start = Instant::now();
    for n in (2..=14).step_by(2) {
        let s = PairingStrategy::canonical(n).map_err(|e| e.to_string())?;
        let r = exhaustive_worst_case_with(&s, n, 8).map_err(|e| e.to_string())?;
        ensure(r.histogram.len() == 1 && r.min_correct == n / 2, || {
            format!("n = {n}: histogram {:?}", r.histogram)
        })?;
    }
    within(start.elapsed(), Duration::from_secs(10), "pairing sweeps")?;
    Ok(format!("even n <= 14 all score n/2 ({:?})", start.elapsed()))
}

fn c2_averaging() -> Outcome {
    let mut checked = 0;
    for n in 2..=12usize {
        let expected = BigUint::from(n) << (n - 1);
        let mut strategies: Vec<Box<dyn Strategy>> = vec![
            Box::new(MajorityStrategy::new(n, Color::Red).unwrap()),
            Box::new(MajorityStrategy::new(n, Color::Blue).unwrap()),
            Box::new(CompositeStrategy::new(n).unwrap()),
        ];
        if n % 2 == 0 {
            strategies.push(Box::new(PairingStrategy::canonical(n).unwrap()));
        }
        for s in &strategies {
            let total = total_correct_over_omega(s, n).map_err(|e| e.to_string())?;
            ensure(total == expected, || format!("{} n = {n}: Σcor = {total}, want {expected}", s.name()))?;
            checked += 1;
        }
    }
    Ok(format!("Σcor = n·2^(n-1) exactly for {checked} (strategy, n) pairs"))
}

fn c3_identity() -> Outcome {
    let start = Instant::now();
    for n in (2..=64).step_by(2) {
        let c = identity_check(n).map_err(|e| e.to_string())?;
        ensure(c.equal, || format!("n = {n}: {} != {}", c.lhs, c.rhs))?;
    }
    within(start.elapsed(), Duration::from_secs(1), "identity checks")?;
    Ok(format!("exact for every even n <= 64 ({:?})", start.elapsed()))
}

fn c4_theorem_desk_scale() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 6..=18usize {
        let s = CompositeStrategy::new(n).unwrap();
        let t0 = Instant::now();
        let r = exhaustive_worst_case_with(&s, n, 8).map_err(|e| e.to_string())?;
        let bound = guarantee_bound(n, None).unwrap();
        ensure(r.worst_loss as f64 <= bound.theorem_loss(), || {
            format!("n = {n}: loss {} on {} exceeds {}", r.worst_loss, r.witness, bound.theorem_loss())
        })?;
        if n % 2 == 0 {
            let plan = make_partition(n).unwrap();
            let structural = guarantee_bound(n, Some(&plan)).unwrap().structural_loss.unwrap();
            ensure(r.worst_loss <= structural as i64, || {
                format!("n = {n}: loss {} exceeds structural {structural}", r.worst_loss)
            })?;
        }
        if n == 18 {
            within(t0.elapsed(), Duration::from_secs(120), "n = 18 sweep")?;
        }
        summary.push(format!("{n}:{}", r.worst_loss));
    }
    Ok(format!("worst losses {} ({:?})", summary.join(" "), start.elapsed()))
}

/// All ordered perfect matchings of `1..=m`.
fn ordered_pairings(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for j in 0..tail.len() {
            let other = tail[j];
            let remaining: Vec<usize> = tail.iter().copied().filter(|&x| x != other).collect();
            for pair in [(first, other), (other, first)] {
                acc.push(pair);
                go(&remaining, acc, out);
                acc.pop();
            }
        }
    }
    let players: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    go(&players, &mut Vec::new(), &mut out);
    out
}

fn c5_block_table() -> Outcome {
    let mut cases = 0u64;
    let mut tight = 0u64;
    for size in [2usize, 4, 6, 8] {
        let half = (size / 2) as i64;
        let pairings = ordered_pairings(size);
        let omegas: Vec<HatDistribution> =
            (0..1u64 << size).map(|i| HatDistribution::from_index(size, i).unwrap()).collect();
        for a in -2..half {
            for b in half..=size as i64 {
                if a + 2 > b {
                    continue;
                }
                for pairs in &pairings {
                    let pairing = Pairing::new(size, pairs.clone()).map_err(|e| e.to_string())?;
                    let params = PartialParams::new(PlayerSet::full(size), a, b, pairing)
                        .map_err(|e| e.to_string())?;
                    let s = PartialStrategy::new(params);
                    for omega in &omegas {
                        let got = s.correct_in_block(omega).map_err(|e| e.to_string())? as i64;
                        let want = lemma_table_bound(omega, s.params());
                        ensure(got >= want, || format!("|T| = {size}, a = {a}, b = {b}, {pairs:?}, {omega}: {got} < {want}"))?;
                        let reds = omega.red_count() as i64;
                        if reds > b || reds <= a {
                            ensure(got == want, || format!("|T| = {size}, a = {a}, b = {b}, {omega}: {got} != {want}"))?;
                            tight += 1;
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} cases, {tight} equality cases"))
}

fn c6_at_most_one_failure() -> Outcome {
    let mut checked = 0u64;
    for n in (2..=14).step_by(2) {
        let s = CompositeStrategy::new(n).unwrap();
        let k = s.plan().k();
        for idx in 0..1u64 << n {
            let omega = HatDistribution::from_index(n, idx).unwrap();
            let failing = s.failing_blocks(&omega).map_err(|e| e.to_string())?;
            ensure(failing.len() <= 1, || format!("n = {n}, {omega}: blocks {failing:?} fail"))?;
            if let Some(&i) = failing.first() {
                ensure(i % k == omega.red_count() % k, || {
                    format!("n = {n}, {omega}: failing block {i} but |R| = {}", omega.red_count())
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} distributions, never more than one failing block"))
}

fn c7_optimal_search() -> Outcome {
    let start = Instant::now();
    for (n, best, count) in [(1usize, 0usize, 2u64), (2, 1, 16), (3, 1, 4096)] {
        let r = search_optimal(n).map_err(|e| e.to_string())?;
        ensure(r.best_min_correct == best, || format!("n = {n}: best {} != {best}", r.best_min_correct))?;
        ensure(r.strategies_enumerated == count, || format!("n = {n}: {} profiles", r.strategies_enumerated))?;
    }
    within(start.elapsed(), Duration::from_secs(1), "optimal search")?;
    Ok(format!("best guarantees 0, 1, 1 for n = 1, 2, 3 ({:?})", start.elapsed()))
}

fn c8_lower_bound() -> Outcome {
    let lb = lower_bound_loss(100);
    ensure((lb - 2.9762).abs() <= 1e-4, || format!("lower_bound_loss(100) = {lb}"))?;
    for n in (2..=64).step_by(2) {
        ensure(robbins_check(n).map_err(|e| e.to_string())?.holds, || format!("robbins fails at n = {n}"))?;
    }
    for n in (6..=18).step_by(2) {
        let strategies: Vec<Box<dyn Strategy>> = vec![
            Box::new(PairingStrategy::canonical(n).unwrap()),
            Box::new(MajorityStrategy::new(n, Color::Red).unwrap()),
            Box::new(CompositeStrategy::new(n).unwrap()),
        ];
        for s in &strategies {
            let r = exhaustive_worst_case_with(s, n, 8).map_err(|e| e.to_string())?;
            ensure(r.worst_loss as f64 >= lower_bound_loss(n as u64), || {
                format!("{} at n = {n} has loss {} below {}", s.name(), r.worst_loss, lower_bound_loss(n as u64))
            })?;
        }
    }
    Ok(format!("lower_bound_loss(100) = {lb:.6}, robbins holds, no strategy beats the bound"))
}

fn c9_monte_carlo() -> Outcome {
    let start = Instant::now();
    let mut runs = Vec::new();
    for n in [1000usize, 999] {
        let s = CompositeStrategy::new(n).unwrap();
        let theorem = guarantee_bound(n, None).unwrap().theorem_loss();
        let modes = [
            RedCount::Uniform,
            RedCount::Exactly(n / 2),
            RedCount::Exactly(n * 3 / 4),
            RedCount::Exactly(n * 9 / 10),
        ];
        for (seed, mode) in modes.into_iter().enumerate() {
            let r = monte_carlo(&s, n, 10_000, mode, 42 + seed as u64, 8).map_err(|e| e.to_string())?;
            ensure(r.worst_loss as f64 <= theorem, || {
                format!("n = {n}, {mode}: sampled loss {} exceeds {theorem}", r.worst_loss)
            })?;
            runs.push(format!("{n}/{mode}:{}", r.worst_loss));
        }
    }
    within(start.elapsed(), Duration::from_secs(60), "Monte Carlo runs")?;
    Ok(format!("no violations, worst sampled losses {} ({:?})", runs.join(" "), start.elapsed()))
}

fn c10_no_peek() -> Outcome {
    let mut total = 0;
    for n in [8usize, 16, 100] {
        let plan = make_partition(n).unwrap();
        let block = plan.block(1).clone();
        let half = block.len() as i64 / 2;
        let partial = PartialParams::new(block, half - 2, half + 1, Pairing::canonical(n).unwrap()).unwrap();
        let strategies: Vec<Box<dyn Strategy>> = vec![
            Box::new(PairingStrategy::canonical(n).unwrap()),
            Box::new(MajorityStrategy::new(n, Color::Red).unwrap()),
            Box::new(MajorityStrategy::new(n, Color::Blue).unwrap()),
            Box::new(CompositeStrategy::new(n).unwrap()),
            Box::new(CompositeStrategy::new(n - 1).unwrap()),
            Box::new(PartialStrategy::new(partial)),
        ];
        for s in &strategies {
            let bad = sample_no_peek(s, 10_000, n as u64).map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("{} at n = {}: {} guess changes", s.name(), s.players(), bad.len()))?;
            total += 10_000;
        }
    }
    // The guard itself: a view never reveals its own observer's hat.
    let omega: HatDistribution = "RB".parse().unwrap();
    ensure(VisibleView::new(&omega, 1).unwrap().color(1).is_err(), || "view leaked own hat".into())?;
    Ok(format!("{total} flip tests, zero guess changes"))
}

#[test]
fn acceptance_suite() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 pairing exactness", c1_pairing_exactness),
        ("2 averaging identity", c2_averaging),
        ("3 binomial identity", c3_identity),
        ("4 composite guarantee at desk scale", c4_theorem_desk_scale),
        ("5 block strategy table", c5_block_table),
        ("6 at most one failing block", c6_at_most_one_failure),
        ("7 optimal search", c7_optimal_search),
        ("8 lower-bound consistency", c8_lower_bound),
        ("9 Monte Carlo scale check", c9_monte_carlo),
        ("10 no-peek property", c10_no_peek),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
