//! Reference examples re-checked by `regdist selftest`.

use regdist::glaisher::{double_glaisher, phi, to_matrices, wrap_shift};
use regdist::orbit::{classify_orbit, step_t, Outcome};
use regdist::{forward, inverse, BijectionConfig, ModulusPair, Partition};

pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
}

fn p(text: &str) -> Partition {
    text.parse().expect("valid literal")
}

type Check = fn() -> regdist::Result<bool>;

const CHECKS: &[(&str, Check)] = &[
    ("weight of 108,18^4 is 180", || {
        Ok(p("108,18^4").weight() == 180)
    }),
    ("30^6 is not 6-regular", || Ok(!p("30^6").is_regular(6)?)),
    (
        "3^60 is not 10-distinct",
        || Ok(!p("3^60").is_distinct(10)?),
    ),
    ("10^4,5^7,3^5,1^2 is 9-regular and 15-distinct", || {
        let x = p("10^4,5^7,3^5,1^2");
        Ok(x.is_regular(9)? && x.is_distinct(15)?)
    }),
    ("phi_6: 108,18^4 <-> 3^60", || {
        Ok(phi(&p("108,18^4"), 6)? == p("3^60") && phi(&p("3^60"), 6)? == p("108,18^4"))
    }),
    ("phi_3(15) = 5^3", || Ok(phi(&p("15"), 3)? == p("5^3"))),
    ("phi_10(50) = 5^10", || Ok(phi(&p("50"), 10)? == p("5^10"))),
    ("phi_3 fixes 25", || Ok(phi(&p("25"), 3)? == p("25"))),
    ("base-2 matrices of 20,5^2,4,2^2,1^5", || {
        let m = to_matrices(&p("20,5^2,4,2^2,1^5"), 2)?;
        Ok(m.dense(1, 3, 3) == [[1, 0, 1], [0, 1, 0], [1, 0, 0]]
            && m.dense(3, 3, 3) == [[0; 3]; 3]
            && m.dense(5, 3, 3) == [[0, 1, 0], [0, 0, 0], [1, 0, 0]])
    }),
    ("wrap shift: 3^5 -> 15, 5^5 -> 25", || {
        Ok(wrap_shift(&p("3^5"), 5)? == p("15") && wrap_shift(&p("5^5"), 5)? == p("25"))
    }),
    (
        "double Glaisher (3,5): 10^4,5^2,1^2 -> 18^2,9,3,2^2",
        || Ok(double_glaisher(&p("10^4,5^2,1^2"), 3, 5)? == p("18^2,9,3,2^2")),
    ),
    ("analyze (9,15) and (18,30)", || {
        let a = ModulusPair::analyze(9, 15)?;
        let b = ModulusPair::analyze(18, 30)?;
        Ok(a.shared_primes() == [3]
            && a.shared()[0].complement() == 5
            && a.shared()[0].s_exp() == 2
            && a.s_exclusive() == 1
            && b.shared_primes() == [2, 3]
            && b.s_exclusive() == 1)
    }),
    (
        "map (9,15): 10^4,5^7,3^5,1^2 <-> 25,18^2,9,5^3,3,2^2",
        || {
            let cfg = BijectionConfig::default();
            let x = p("10^4,5^7,3^5,1^2");
            let y = forward(&x, 9, 15, &cfg)?;
            Ok(y == p("25,18^2,9,5^3,3,2^2") && inverse(&y, 9, 15, &cfg)? == x)
        },
    ),
    ("map (18,30) of 9 depends on prime order", || {
        let three_first = BijectionConfig::with_order(vec![3, 2]);
        let two_first = BijectionConfig::with_order(vec![2, 3]);
        Ok(forward(&p("9"), 18, 30, &three_first)? == p("1^9")
            && inverse(&p("1^9"), 18, 30, &three_first)? == p("9")
            && forward(&p("9"), 18, 30, &two_first)? == p("9"))
    }),
    ("T_(6,10): 50 -> 30,5^4 -> 18,5^4,3^4 in 2 steps", || {
        let r = classify_orbit(&p("50"), 6, 10, 1000)?;
        Ok(step_t(&p("50"), 6, 10)? == p("30,5^4")
            && r.outcome == Outcome::Success { ell: 2 }
            && r.trajectory.last() == Some(&p("18,5^4,3^4")))
    }),
    ("T_(10,6): 108,18^4 cycles with period 3", || {
        let r = classify_orbit(&p("108,18^4"), 10, 6, 1000)?;
        Ok(r.outcome
            == Outcome::Cycle {
                length: 3,
                entry_index: 0,
            }
            && r.trajectory == [p("108,18^4"), p("30^6"), p("3^60")]
            && r.trajectory
                .iter()
                .all(|x| !(x.is_regular(6).unwrap() && x.is_distinct(10).unwrap())))
    }),
];

pub fn run() -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|&(name, check)| CheckResult {
            name,
            passed: check().unwrap_or(false),
        })
        .collect()
}
