//! Named verification suites: batteries that sweep the library's operations
//! against definitional oracles and brute-force scans at desk scale.
//!
//! The suite tokens `section1` through `section4` are the stable external
//! names; each maps to one battery:
//! `section1` — subgroup/ideal correspondence and quotient isomorphisms,
//! `section2` — radical closed forms against Frobenius kernels and scans,
//! `section3` — exclusion constructors, lattice censuses, saturation,
//! `section4` — the circulant-rank classifier against the rebuild oracle.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census;
use crate::classifier::{self, Verdict};
use crate::counterexamples;
use crate::element::{decode_coeffs, encode_coeffs, make_element};
use crate::error::{Error, Result};
use crate::exec;
use crate::group::{make_group, FiniteAbelianGroup};
use crate::quotient;
use crate::radicals::{self, ClosedForm, SCAN_LIMIT};
use crate::ring::{make_ring, RingDescriptor};
use crate::subspace;

/// Size caps and the seed for the randomized sub-batteries.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteBounds {
    /// Coefficient field characteristics to sweep.
    pub primes: Vec<u64>,
    /// Largest |G| for the correspondence sweeps.
    pub max_group_order: u64,
    /// Largest |G| for full quotient structure-constant comparison.
    pub quotient_iso_max_order: u64,
    /// Largest |G| for the radical batteries.
    pub radical_max_order: u64,
    /// Seed for the randomized membership batteries.
    pub seed: u64,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            primes: vec![2, 3, 5],
            max_group_order: 24,
            quotient_iso_max_order: 16,
            radical_max_order: 12,
            seed: 0x1d5a,
        }
    }
}

/// One failed check, with enough context to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

/// Aggregate outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall_ms: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITE_NAMES: [&str; 4] = ["section1", "section2", "section3", "section4"];

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    /// Counts a case; on failure, materializes (case, expected, actual).
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> (String, String, String)) {
        self.cases += 1;
        if !ok {
            let (case, expected, actual) = detail();
            self.failures.push(Failure { case, expected, actual });
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

fn battery(name: &str) -> Option<fn(&SuiteBounds) -> Tally> {
    match name {
        "section1" => Some(correspondence_battery),
        "section2" => Some(radical_battery),
        "section3" => Some(exclusion_battery),
        "section4" => Some(classifier_battery),
        _ => None,
    }
}

/// Runs the named suite, or every suite for `all`.
pub fn run_suite(name: &str, bounds: &SuiteBounds) -> Result<SuiteResult> {
    for &p in &bounds.primes {
        if !make_ring(p)?.is_field() {
            return Err(Error::NonPrimeModulus(p));
        }
    }
    let started = Instant::now();
    let tally = if name == "all" {
        let mut total = Tally::default();
        for suite in SUITE_NAMES {
            total.merge(battery(suite).expect("known suite")(bounds));
        }
        total
    } else {
        let Some(run) = battery(name) else {
            return Err(Error::UnknownSuite(name.to_string()));
        };
        run(bounds)
    };
    Ok(SuiteResult {
        name: name.to_string(),
        cases: tally.cases,
        failures: tally.failures,
        wall_ms: started.elapsed().as_millis(),
    })
}

/// Invariant-factor forms d_1 | d_2 | ... | d_k (each at least 2, product at
/// most `bound`): one representative per isomorphism class of nontrivial
/// finite abelian groups.
pub fn abelian_groups_up_to(bound: u64) -> Vec<Vec<u64>> {
    fn grow(prefix: &mut Vec<u64>, product: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = *prefix.last().expect("nonempty prefix");
        let mut next = last;
        while product * next <= bound {
            prefix.push(next);
            grow(prefix, product * next, bound, out);
            prefix.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    for d in 2..=bound {
        prefix.push(d);
        grow(&mut prefix, d, bound, &mut out);
        prefix.pop();
    }
    out
}

fn mix_seed(seed: u64, salt: u64, orders: &[u64]) -> u64 {
    orders.iter().fold(seed ^ salt.rotate_left(40), |acc, &d| {
        acc.wrapping_mul(0x100_0000_01b3).wrapping_add(d)
    })
}

// --- section1: the correspondence N <-> phi(N) ---------------------------

fn correspondence_battery(bounds: &SuiteBounds) -> Tally {
    let mut jobs: Vec<(u64, Vec<u64>)> = Vec::new();
    for &p in &bounds.primes {
        for orders in abelian_groups_up_to(bounds.max_group_order) {
            jobs.push((p, orders));
        }
    }
    let mut tally = Tally::default();
    for partial in exec::map_cases(&jobs, |(p, orders)| correspondence_case(*p, orders, bounds)) {
        tally.merge(partial);
    }
    tally
}

fn correspondence_case(p: u64, orders: &[u64], bounds: &SuiteBounds) -> Tally {
    let mut tally = Tally::default();
    let ring = make_ring(p).expect("validated prime");
    let group = make_group(orders).expect("bounded orders");
    let size = group.size();
    let subgroups = group.all_subgroups().expect("bounded lattice");

    let mut ideals = Vec::with_capacity(subgroups.len());
    for sub in &subgroups {
        let ideal = subspace::phi(&ring, &group, sub).expect("prime field");
        let recovered = subspace::psi(&ideal);
        tally.check(recovered.elements() == sub.elements(), || {
            (
                format!("psi(phi(N)) over F_{p} {orders:?}, N of order {}", sub.order()),
                format!("{:?}", sub.elements()),
                format!("{:?}", recovered.elements()),
            )
        });
        let expected_dim = (size - size / sub.order() as u64) as usize;
        tally.check(ideal.dimension() == expected_dim, || {
            (
                format!("dim phi(N) over F_{p} {orders:?}, N of order {}", sub.order()),
                expected_dim.to_string(),
                ideal.dimension().to_string(),
            )
        });
        if size <= bounds.quotient_iso_max_order {
            let iso = quotient::verify_quotient_iso(&ring, &group, sub)
                .expect("bounded quotient");
            tally.check(iso, || {
                (
                    format!(
                        "RG/phi(N) vs R(G/N) over F_{p} {orders:?}, N of order {}",
                        sub.order()
                    ),
                    "matching structure constants".to_string(),
                    "structure constants differ".to_string(),
                )
            });
        }
        ideals.push(ideal);
    }

    // Randomized membership battery: x is in phi(G) exactly when its
    // augmentation vanishes, and ideals absorb products.
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(bounds.seed, p, orders));
    let aug = subspace::augmentation_ideal(&ring, &group).expect("prime field");
    for _ in 0..32 {
        let coeffs: Vec<u64> = (0..group.len()).map(|_| rng.random_range(0..p)).collect();
        let x = make_element(&ring, &group, &coeffs).expect("ambient length");
        let member = aug.contains(&x).expect("same ambient");
        tally.check(member == (x.augmentation() == 0), || {
            (
                format!("x in phi(G) iff aug(x) = 0 over F_{p} {orders:?}"),
                format!("membership {}", x.augmentation() == 0),
                format!("membership {member}"),
            )
        });
    }
    for _ in 0..16 {
        let ideal = &ideals[rng.random_range(0..ideals.len())];
        if ideal.is_zero() {
            continue;
        }
        let basis = ideal.basis_elements();
        let b = &basis[rng.random_range(0..basis.len())];
        let coeffs: Vec<u64> = (0..group.len()).map(|_| rng.random_range(0..p)).collect();
        let x = make_element(&ring, &group, &coeffs).expect("ambient length");
        let product = x.mul(b).expect("same ambient");
        tally.check(ideal.contains(&product).expect("same ambient"), || {
            (
                format!("phi(N) absorbs products over F_{p} {orders:?}"),
                "product inside the ideal".to_string(),
                format!("escaped with coefficients {:?}", product.coeffs()),
            )
        });
    }
    tally
}

// --- section2: radicals against kernels and scans -------------------------

/// Composite-modulus quasi-regularity scans cost |R|^|G| per radical member,
/// so the battery trims them harder than `SCAN_LIMIT`.
const COMPOSITE_JACOBSON_LIMIT: u128 = 1 << 12;

fn radical_battery(bounds: &SuiteBounds) -> Tally {
    let mut moduli: Vec<u64> = bounds.primes.clone();
    moduli.extend([4, 6, 8, 9, 12]);
    moduli.sort_unstable();
    moduli.dedup();
    let mut jobs: Vec<(u64, Vec<u64>)> = Vec::new();
    for &n in &moduli {
        for orders in abelian_groups_up_to(bounds.radical_max_order) {
            jobs.push((n, orders));
        }
    }
    let mut tally = Tally::default();
    for partial in exec::map_cases(&jobs, |(n, orders)| radical_case(*n, orders)) {
        tally.merge(partial);
    }
    tally
}

fn radical_case(n: u64, orders: &[u64]) -> Tally {
    let mut tally = Tally::default();
    let ring = make_ring(n).expect("bounded modulus");
    let group = make_group(orders).expect("bounded orders");
    let report = radicals::nilradical_closed_form(&ring, &group);

    // The branch must match the reducedness/support arithmetic it claims.
    let no_support_divisor =
        group.support_primes().iter().all(|&q| n % q != 0);
    let expected_branch = if ring.is_reduced() && no_support_divisor {
        "zero"
    } else if ring.is_field() {
        "sylow"
    } else {
        "out-of-family"
    };
    let actual_branch = match &report.closed_form {
        ClosedForm::Zero => "zero",
        ClosedForm::PhiOfSylow { .. } => "sylow",
        ClosedForm::NoClosedFormInScope => "out-of-family",
    };
    tally.check(expected_branch == actual_branch, || {
        (
            format!("nilradical branch over Z/{n} {orders:?}"),
            expected_branch.to_string(),
            actual_branch.to_string(),
        )
    });

    if ring.is_field() {
        let frobenius =
            radicals::nilradical_frobenius(&ring, &group).expect("prime field");
        let expected = match &report.closed_form {
            ClosedForm::PhiOfSylow { subgroup, .. } => {
                subspace::phi(&ring, &group, subgroup).expect("prime field")
            }
            _ => subspace::zero_subspace(&ring, &group).expect("prime field"),
        };
        tally.check(frobenius == expected, || {
            (
                format!("Frobenius kernel vs closed form over F_{n} {orders:?}"),
                format!("dimension {}", expected.dimension()),
                format!("dimension {}", frobenius.dimension()),
            )
        });
        tally.check(report.subspace.as_ref() == Some(&frobenius), || {
            (
                format!("report subspace vs Frobenius kernel over F_{n} {orders:?}"),
                "equal echelon bases".to_string(),
                "bases differ".to_string(),
            )
        });
    }

    let scan = (n as u128).pow(group.len() as u32);
    if scan <= SCAN_LIMIT {
        let nil = radicals::nilpotent_bruteforce(&ring, &group).expect("within gate");

        // Nil membership of the augmentation generators vs the support rule.
        let aug_nil = (1..group.len()).all(|g| {
            let mut coeffs = vec![0u64; group.len()];
            coeffs[g] = 1;
            coeffs[0] = n - 1;
            nil.binary_search(&encode_coeffs(n, &coeffs)).is_ok()
        });
        tally.check(radicals::aug_in_nilradical(&ring, &group) == aug_nil, || {
            (
                format!("I(G) nil iff supp G is nilpotent in Z/{n} {orders:?}"),
                format!("{aug_nil}"),
                format!("{}", radicals::aug_in_nilradical(&ring, &group)),
            )
        });

        match &report.closed_form {
            ClosedForm::Zero => {
                tally.check(nil == [0], || {
                    (
                        format!("zero nilradical vs scan over Z/{n} {orders:?}"),
                        "1 element".to_string(),
                        format!("{} elements", nil.len()),
                    )
                });
            }
            ClosedForm::PhiOfSylow { .. } => {
                let members = report
                    .subspace
                    .as_ref()
                    .expect("field branch carries the subspace")
                    .enumerate_members()
                    .expect("within gate");
                tally.check(nil == members, || {
                    (
                        format!("phi(Sylow) vs nilpotent scan over F_{n} {orders:?}"),
                        format!("{} elements", members.len()),
                        format!("{} elements", nil.len()),
                    )
                });
            }
            ClosedForm::NoClosedFormInScope => {}
        }

        let jacobson_gate =
            if ring.is_field() { SCAN_LIMIT } else { COMPOSITE_JACOBSON_LIMIT };
        if scan <= jacobson_gate {
            let jac = radicals::jacobson_bruteforce(&ring, &group).expect("within gate");
            tally.check(nil == jac, || {
                (
                    format!("nilpotent vs quasi-regular scan over Z/{n} {orders:?}"),
                    format!("{} elements", nil.len()),
                    format!("{} elements", jac.len()),
                )
            });
            let closure = radicals::ideal_closure(
                &ring,
                &group,
                &radicals::jacobson_generators(&ring, &group),
            )
            .expect("within gate");
            tally.check(closure == jac, || {
                (
                    format!("generator closure vs quasi-regular scan over Z/{n} {orders:?}"),
                    format!("{} elements", jac.len()),
                    format!("{} elements", closure.len()),
                )
            });
        }
    }
    tally
}

// --- section3: exclusions, censuses, saturation ---------------------------

fn exclusion_battery(bounds: &SuiteBounds) -> Tally {
    let mut tally = Tally::default();

    for (p, orders) in [(3u64, vec![3u64]), (5, vec![5]), (3, vec![9])] {
        let ring = make_ring(p).expect("prime");
        let group = make_group(&orders).expect("bounded orders");
        let witness =
            counterexamples::square_counterexample(&ring, &group).expect("hypotheses hold");
        tally.check(witness.is_excluded(), || {
            (
                format!("square witness excluded over F_{p} {orders:?}"),
                "no subgroup matches".to_string(),
                format!("matched {:?}", witness.phi_preimage.map(|s| s.elements().to_vec())),
            )
        });
    }

    for orders in [vec![4u64], vec![8], vec![2, 4]] {
        let ring = make_ring(2).expect("prime");
        let group = make_group(&orders).expect("bounded orders");
        let witness =
            counterexamples::cube_counterexample(&ring, &group).expect("hypotheses hold");
        let chain = witness.chain.expect("cube witness carries its chain");
        tally.check(witness.is_excluded(), || {
            (
                format!("cube witness excluded over F_2 {orders:?}"),
                "no subgroup matches".to_string(),
                format!("matched {:?}", witness.phi_preimage.map(|s| s.elements().to_vec())),
            )
        });
        tally.check(
            chain.inner_dimension > 0 && chain.inner_dimension < chain.outer_dimension,
            || {
                (
                    format!("strict chain over F_2 {orders:?}"),
                    "0 < dim xRG < dim phi(<g^2>)".to_string(),
                    format!("{} vs {}", chain.inner_dimension, chain.outer_dimension),
                )
            },
        );
    }

    for orders in [vec![2u64, 2], vec![2, 2, 2]] {
        let ring = make_ring(2).expect("prime");
        let group = make_group(&orders).expect("bounded orders");
        let witness = counterexamples::four_term_counterexample(&ring, &group)
            .expect("hypotheses hold");
        tally.check(witness.is_excluded(), || {
            (
                format!("four-term witness excluded over F_2 {orders:?}"),
                "no subgroup matches".to_string(),
                format!("matched {:?}", witness.phi_preimage.map(|s| s.elements().to_vec())),
            )
        });
    }

    // Constructors must refuse out-of-hypothesis inputs.
    let two = make_ring(2).expect("prime");
    let c2 = make_group(&[2]).expect("tiny");
    tally.check(
        matches!(
            counterexamples::square_counterexample(&two, &c2),
            Err(Error::NotApplicable(_))
        ),
        || {
            (
                "square witness refuses characteristic two".to_string(),
                "not-applicable".to_string(),
                "constructed".to_string(),
            )
        },
    );
    tally.check(
        matches!(
            counterexamples::cube_counterexample(&two, &make_group(&[2, 2]).expect("tiny")),
            Err(Error::NotApplicable(_))
        ),
        || {
            (
                "cube witness refuses exponent-two groups".to_string(),
                "not-applicable".to_string(),
                "constructed".to_string(),
            )
        },
    );
    tally.check(
        matches!(
            counterexamples::four_term_counterexample(&two, &c2),
            Err(Error::NotApplicable(_))
        ),
        || {
            (
                "four-term witness refuses order two".to_string(),
                "not-applicable".to_string(),
                "constructed".to_string(),
            )
        },
    );

    // The augmentation ideal is the unique prime exactly over matching
    // p-groups.
    for &p in &bounds.primes {
        let ring = make_ring(p).expect("validated prime");
        for orders in abelian_groups_up_to(bounds.radical_max_order) {
            let group = make_group(&orders).expect("bounded orders");
            let expected = group.support_primes() == [p];
            let actual =
                counterexamples::unique_prime_check(&ring, &group).expect("prime field");
            tally.check(actual == expected, || {
                (
                    format!("I(G) unique prime over F_{p} {orders:?}"),
                    expected.to_string(),
                    actual.to_string(),
                )
            });
        }
    }

    // Pinned censuses: the only saturated case is F_2 C_2.
    let census_cases: [(u64, Vec<u64>, bool); 4] = [
        (2, vec![2], true),
        (2, vec![4], false),
        (3, vec![3], false),
        (2, vec![2, 2], false),
    ];
    for (p, orders, saturated) in census_cases {
        let ring = make_ring(p).expect("prime");
        let group = make_group(&orders).expect("bounded orders");
        let census = census::ideal_census(&ring, &group).expect("tiny census");
        tally.check(census.image_is_whole_lattice() == Some(saturated), || {
            (
                format!("census saturation over F_{p} {orders:?}"),
                format!("{saturated}"),
                format!("{:?}", census.image_is_whole_lattice()),
            )
        });
        let fibers = census.fiber_sizes.as_ref().expect("tiny census");
        let total: u64 = fibers.iter().map(|f| f.count).sum();
        tally.check(Some(total) == census.ideal_count, || {
            (
                format!("fibers partition the ideals over F_{p} {orders:?}"),
                format!("{:?}", census.ideal_count),
                total.to_string(),
            )
        });
        let covers = census.phi_image.iter().all(|entry| {
            fibers.iter().any(|f| f.subgroup == entry.subgroup && f.count >= 1)
        });
        tally.check(covers, || {
            (
                format!("each fiber contains its phi(N) over F_{p} {orders:?}"),
                "every subgroup's fiber nonempty".to_string(),
                "a fiber is missing".to_string(),
            )
        });
    }

    // Saturation equivalence on cyclic groups: both the census comparison
    // (when the sweep is in range) and the principal-ideal scan agree that
    // F_2 C_2 is the only saturated case.
    for &p in &bounds.primes {
        let ring = make_ring(p).expect("validated prime");
        for m in 2..=6u64 {
            let group = make_group(&[m]).expect("tiny");
            let saturated = p == 2 && m == 2;
            let outside = principal_outside_image(&ring, &group);
            tally.check((outside == 0) == saturated, || {
                (
                    format!("non-unit principal ideals outside the image over F_{p} C_{m}"),
                    if saturated { "none".to_string() } else { "at least one".to_string() },
                    outside.to_string(),
                )
            });
            if census::count_subspaces(p, group.len()) <= census::SUBSPACE_LIMIT {
                let census = census::ideal_census(&ring, &group).expect("within gate");
                tally.check(census.image_is_whole_lattice() == Some(saturated), || {
                    (
                        format!("census saturation over F_{p} C_{m}"),
                        format!("{saturated}"),
                        format!("{:?}", census.image_is_whole_lattice()),
                    )
                });
            }
        }
    }

    tally
}

/// Number of proper principal ideals x RG that are not phi(N) for any N.
fn principal_outside_image(ring: &RingDescriptor, group: &FiniteAbelianGroup) -> u64 {
    let total = (ring.modulus() as u128).pow(group.len() as u32);
    assert!(total <= SCAN_LIMIT, "principal scan bounded by the census grid");
    exec::filter_range(total as u64, |code| {
        let coeffs = decode_coeffs(ring.modulus(), group.len(), code);
        let x = make_element(ring, group, &coeffs).expect("ambient length");
        let ideal =
            subspace::ideal_generated(ring, group, &[x]).expect("prime field");
        !ideal.is_full()
            && subspace::in_phi_image(&ideal).expect("prime field").is_none()
    })
    .len() as u64
}

// --- section4: the circulant-rank classifier ------------------------------

const CLASSIFIER_PAIRS: [(u64, u64); 9] =
    [(2, 2), (2, 4), (2, 6), (2, 8), (2, 12), (3, 3), (3, 4), (3, 6), (5, 4)];

fn classifier_battery(_bounds: &SuiteBounds) -> Tally {
    let mut tally = Tally::default();
    for (p, m) in CLASSIFIER_PAIRS {
        tally.merge(classifier_pair_battery(p, m));
    }
    tally
}

/// Exhaustive agreement sweep for one (p, m): the classifier verdict against
/// the rebuild oracle, and both membership criteria against direct subspace
/// membership, for every element of F_p C_m.
fn classifier_pair_battery(p: u64, m: u64) -> Tally {
    let ring = make_ring(p).expect("prime");
    let group = make_group(&[m]).expect("cyclic");
    let len = group.len();

    // phi(<g^k>) for each power, shared across the sweep.
    let power_ideals: Vec<subspace::IdealSubspace> = (1..m)
        .map(|k| {
            let sub = group.subgroup_generated(&[vec![k]]).expect("cyclic subgroup");
            subspace::phi(&ring, &group, &sub).expect("prime field")
        })
        .collect();

    let codes: Vec<u64> = (0..(p as u128).pow(len as u32) as u64).collect();
    let mut tally = Tally::default();
    let partials = exec::map_cases(&codes, |&code| {
        let mut tally = Tally::default();
        let coeffs = decode_coeffs(p, len, code);
        let x = make_element(&ring, &group, &coeffs).expect("ambient length");
        let report = classifier::classify_principal(&x).expect("cyclic prime field");
        let ideal =
            subspace::ideal_generated(&ring, &group, &[x.clone()]).expect("prime field");
        let oracle = subspace::in_phi_image(&ideal).expect("prime field");

        let agreed = match (&report.verdict, &oracle) {
            (Verdict::ZeroElement, _) => x.is_zero(),
            (Verdict::UnitElement, _) => ideal.is_full(),
            (Verdict::InImage { subgroup }, Some(expected)) => {
                subgroup.elements() == expected.elements()
            }
            (Verdict::NotInImage(_), None) => !x.is_zero() && !ideal.is_full(),
            _ => false,
        };
        tally.check(agreed, || {
            (
                format!("classifier vs rebuild oracle, F_{p} C_{m}, coeffs {coeffs:?}"),
                format!(
                    "oracle {:?}",
                    oracle.as_ref().map(|s| s.elements().to_vec())
                ),
                format!("verdict {:?}", report.verdict),
            )
        });

        for k in 1..m {
            // Rank test for g^k - 1 in xRG vs direct membership.
            let mut power_vec = vec![0u64; len];
            let gk = group.pow(1, k);
            power_vec[gk] = ring.add(power_vec[gk], 1);
            power_vec[0] = ring.sub(power_vec[0], 1);
            let by_rank =
                classifier::contains_power_minus_one(&x, k).expect("cyclic prime field");
            tally.check(by_rank == ideal.contains_vec(&power_vec), || {
                (
                    format!("rank test for g^{k} - 1, F_{p} C_{m}, coeffs {coeffs:?}"),
                    format!("{}", ideal.contains_vec(&power_vec)),
                    format!("{by_rank}"),
                )
            });

            // Residue-sum test for x in (g^k - 1)RG vs direct membership.
            let by_sums = classifier::in_power_ideal(&x, k).expect("cyclic prime field");
            let direct = power_ideals[(k - 1) as usize].contains_vec(x.coeffs());
            tally.check(by_sums == direct, || {
                (
                    format!("residue-sum test for (g^{k}-1)RG, F_{p} C_{m}, coeffs {coeffs:?}"),
                    format!("{direct}"),
                    format!("{by_sums}"),
                )
            });
        }
        tally
    });
    for partial in partials {
        tally.merge(partial);
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_enumeration() {
        assert_eq!(
            abelian_groups_up_to(8),
            vec![
                vec![2],
                vec![2, 2],
                vec![2, 2, 2],
                vec![2, 4],
                vec![3],
                vec![4],
                vec![5],
                vec![6],
                vec![7],
                vec![8],
            ]
        );
        assert!(abelian_groups_up_to(1).is_empty());
        // One entry per isomorphism class of order <= 24.
        let classes = abelian_groups_up_to(24);
        assert_eq!(classes.len(), 36);
        for orders in &classes {
            assert!(orders.windows(2).all(|w| w[1] % w[0] == 0));
            assert!(orders.iter().product::<u64>() <= 24);
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("section9", &SuiteBounds::default()),
            Err(Error::UnknownSuite(_))
        ));
        assert!(matches!(
            run_suite(
                "section1",
                &SuiteBounds { primes: vec![4], ..SuiteBounds::default() }
            ),
            Err(Error::NonPrimeModulus(4))
        ));
    }

    #[test]
    fn correspondence_suite_small_bounds() {
        let bounds = SuiteBounds {
            primes: vec![2, 3],
            max_group_order: 8,
            quotient_iso_max_order: 8,
            radical_max_order: 6,
            seed: 7,
        };
        let result = run_suite("section1", &bounds).unwrap();
        assert_eq!(result.name, "section1");
        assert!(result.cases > 100, "swept {} cases", result.cases);
        assert!(result.passed(), "failures: {:?}", result.failures);
    }

    #[test]
    fn radical_cases_spot_checks() {
        for (n, orders) in
            [(2u64, vec![4u64]), (3, vec![3]), (4, vec![2]), (6, vec![2]), (9, vec![3])]
        {
            let tally = radical_case(n, &orders);
            assert!(tally.cases >= 3);
            assert!(
                tally.failures.is_empty(),
                "Z/{n} {orders:?}: {:?}",
                tally.failures
            );
        }
    }

    #[test]
    fn classifier_pair_spot_check() {
        let tally = classifier_pair_battery(2, 4);
        // 16 elements, each with one verdict case and 2*(4-1) membership cases.
        assert_eq!(tally.cases, 16 * 7);
        assert!(tally.failures.is_empty(), "{:?}", tally.failures);
    }

    #[test]
    fn principal_scan_counts() {
        let ring = make_ring(2).unwrap();
        assert_eq!(principal_outside_image(&ring, &make_group(&[2]).unwrap()), 0);
        // F_2 C_4 has exactly one stray: the chain ideal (g-1)^3 RG.
        assert_eq!(principal_outside_image(&ring, &make_group(&[4]).unwrap()), 1);
    }

    #[test]
    fn exclusion_suite_passes() {
        let bounds = SuiteBounds {
            primes: vec![2, 3],
            radical_max_order: 8,
            ..SuiteBounds::default()
        };
        let result = run_suite("section3", &bounds).unwrap();
        assert!(result.passed(), "failures: {:?}", result.failures);
        assert!(result.cases > 50);
    }
}
