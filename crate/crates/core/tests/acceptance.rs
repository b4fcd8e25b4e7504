//! Acceptance sweep: one test per release criterion, exhaustive at desk
//! scale. Every test asserts exact equality and prints one PASS line with
//! the swept size and the measured time (visible with --nocapture).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use polyqt_core::bijections::{
    labelled_to_stacked, merge_map, merge_map_inverse, parking_to_polyomino,
    polyomino_to_parking, stacked_to_labelled,
};
use polyqt_core::dyck::visit_labelled;
use polyqt_core::enumerators::{
    brute_enumerator, check_recursion, check_two_car, visit_labelled_polyominoes,
    EnumeratorQuery, Family,
};
use polyqt_core::selftest;
use polyqt_core::statistics;
use polyqt_core::symfunc::checks::{
    check_final, check_final_certified, check_identity_1, check_identity_2, check_lemma,
    check_pmaj_conjecture, sample_points, OraclePool, Point,
};
use polyqt_core::symfunc::{partitions_of, Basis, Generator, Partition, SymFunc};
use polyqt_core::{BigRational, DecoratedPolyomino, LabelledPolyomino, ReducedPolyomino};

/// Fixed seed for every point-based criterion, so runs are reproducible.
const SEED: u64 = 7;

fn points() -> Vec<Point> {
    sample_points(3, SEED)
}

/// All subsets of `items` with at most `max` elements, in bitmask order.
fn subsets_up_to(items: &[usize], max: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for bits in 0u32..(1 << items.len()) {
        if (bits.count_ones() as usize) <= max {
            out.push(
                items
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| (bits >> j) & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    out
}

/// All compositions of `total` into positive parts.
fn compositions_of(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions_of(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[test]
fn criterion_1_figure_regression() {
    let start = Instant::now();
    let report = selftest::run();
    let elapsed = start.elapsed();
    assert!(report.passed(), "failed cases: {:?}", report.failures());
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}, budget 1 s");
    println!(
        "PASS criterion 1: {} pinned figure cases in {elapsed:?}",
        report.cases.len()
    );
}

#[test]
fn criterion_2_recursion_matches_brute_force() {
    let start = Instant::now();
    let (report, alternate_failures) = check_recursion(5, 5, 3);
    let elapsed = start.elapsed();
    assert!(report.passed(), "mismatches: {:?}", report.mismatches);
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 2 min");
    println!(
        "PASS criterion 2: {} tuples (recursion = valley brute force = transposed rise \
         brute force), {alternate_failures} always-full base failures, in {elapsed:?}",
        report.checked
    );
}

#[test]
fn criterion_3_bijection_suites() {
    let start = Instant::now();

    // Merge map: bijectivity, round trip, and statistic transport over every
    // valley decoration of at most 2 on every frame up to 5 x 5.
    let mut images: HashSet<(ReducedPolyomino, Vec<usize>)> = HashSet::new();
    let mut image_counts: HashMap<(usize, usize, usize), u64> = HashMap::new();
    let mut merged = 0u64;
    for m in 1..=5usize {
        for n in 1..=5usize {
            for p in ReducedPolyomino::enumerate(m, n) {
                let word = p.area_word();
                let valleys: Vec<usize> = p.red_valleys().into_iter().collect();
                for chosen in subsets_up_to(&valleys, 2) {
                    let from = DecoratedPolyomino::with_valleys(p, chosen.clone()).unwrap();
                    let to = merge_map(&from).unwrap();
                    assert_eq!((to.poly.m(), to.poly.n()), (n, m));
                    assert_eq!(to.rises.len(), chosen.len());
                    let w = to.poly.area_word();
                    assert_eq!(statistics::dinv(&w), statistics::area(&word));
                    assert_eq!(
                        statistics::area_decorated(&w, &to.rises),
                        statistics::bounce_decorated(&p, &chosen)
                    );
                    assert_eq!(statistics::star_zeros(&w), statistics::bullet_zeros(&p));
                    let back = merge_map_inverse(&to).unwrap();
                    assert_eq!(back.poly, p);
                    assert_eq!(back.valleys, chosen);
                    let key = (to.poly.m(), to.poly.n(), to.rises.len());
                    let rises: Vec<usize> = to.rises.iter().copied().collect();
                    assert!(images.insert((to.poly, rises)), "image repeated at {key:?}");
                    *image_counts.entry(key).or_default() += 1;
                    merged += 1;
                }
            }
        }
    }
    // The distinct images exhaust the rise-decorated families.
    let mut codomain_counts: HashMap<(usize, usize, usize), u64> = HashMap::new();
    for m in 1..=5usize {
        for n in 1..=5usize {
            for p in ReducedPolyomino::enumerate(m, n) {
                let rises = p.area_word().rises().len();
                for k in 0..=2usize {
                    let ways = binomial(rises, k);
                    if ways > 0 {
                        *codomain_counts.entry((m, n, k)).or_default() += ways;
                    }
                }
            }
        }
    }
    assert_eq!(image_counts, codomain_counts);

    // Barring map: dinv and every decorated area carry over for all two-car
    // parking functions of size up to 9; the map round-trips.
    let mut barred = 0u64;
    for total in 1..=9usize {
        for ones in 0..=total {
            visit_labelled(0, &[ones, total - ones], &mut |pf| {
                let rises: Vec<usize> = pf.rises().into_iter().collect();
                for dec in subsets_up_to(&rises, rises.len()) {
                    let to = parking_to_polyomino(pf, &dec).unwrap();
                    let w = to.poly.area_word();
                    assert_eq!(statistics::dinv(&w), pf.dinv());
                    assert_eq!(
                        statistics::area_decorated(&w, &to.rises),
                        pf.area_decorated(&dec)
                    );
                    let (back, dec_back) = polyomino_to_parking(&to).unwrap();
                    assert_eq!(&back, pf);
                    assert_eq!(dec_back, dec);
                    barred += 1;
                }
            });
        }
    }

    // Colouring map: on every frame with m + n <= 6 and every label content,
    // the fully stacked labellings biject with the labelled polyominoes, the
    // fully decorated area maps to the image area, and the bottom-to-top
    // ordered labelling transports pmaj to bounce.
    let mut coloured = 0u64;
    for m in 0..=6usize {
        for n in 0..=6 - m {
            for content in compositions_of(n + 1) {
                let mut stacked_count = 0u64;
                visit_labelled(m, &content, &mut |pldp| {
                    let Ok(lp) = stacked_to_labelled(pldp) else {
                        return;
                    };
                    stacked_count += 1;
                    let rises = pldp.rises();
                    assert_eq!(rises.len(), n);
                    assert_eq!(
                        pldp.area_decorated(&rises),
                        statistics::area(&lp.poly.area_word())
                    );
                    let (back, dec) = labelled_to_stacked(&lp).unwrap();
                    assert_eq!(&back, pldp);
                    assert_eq!(dec, rises);
                });
                let mut polyomino_count = 0u64;
                visit_labelled_polyominoes(m, n, &content, &mut |lp| {
                    polyomino_count += 1;
                    let (pldp, dec) = labelled_to_stacked(lp).unwrap();
                    assert_eq!(dec, pldp.rises());
                    assert_eq!(&stacked_to_labelled(&pldp).unwrap(), lp);
                });
                assert_eq!(
                    stacked_count, polyomino_count,
                    "stacked labellings vs labelled polyominoes at ({m}, {n}) {content:?}"
                );
                coloured += stacked_count;
            }
        }
    }
    for m in 0..=6usize {
        for n in 0..=6 - m {
            for p in ReducedPolyomino::enumerate(m, n) {
                let ordered: Vec<u32> = (2..=n as u32 + 1).collect();
                let lp = LabelledPolyomino::new(p, 1, ordered).unwrap();
                let (pldp, _) = labelled_to_stacked(&lp).unwrap();
                assert_eq!(pldp.pmaj(), statistics::bounce(&p));
            }
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(180), "took {elapsed:?}, budget 3 min");
    println!(
        "PASS criterion 3: merge {merged}, barring {barred}, colouring {coloured} \
         objects round-tripped with transported statistics in {elapsed:?}"
    );
}

#[test]
fn criterion_4_two_car_equality() {
    let start = Instant::now();
    let report = check_two_car(4, 4, 2);
    let elapsed = start.elapsed();
    assert!(report.passed(), "mismatches: {:?}", report.mismatches);
    println!(
        "PASS criterion 4: {} (m, n, s, k) tuples of two-car parking vs valley \
         polyomino enumerators in {elapsed:?}",
        report.checked
    );
}

#[test]
fn criterion_5_oracle_pins() {
    let start = Instant::now();
    let pts = points();
    let mut pool = OraclePool::new(8);
    let two = Partition::from_parts(vec![2]);
    let pair = Partition::from_parts(vec![1, 1]);
    for point in &pts {
        let o = pool.oracle(point);
        let (q, t) = (o.q().clone(), o.t().clone());

        // Macdonald pins in the Schur basis.
        let h2 = o.macdonald(&two).unwrap();
        let h2_s = o.convert(&h2, Basis::Schur).unwrap();
        assert_eq!(h2_s.coeff(&two), BigRational::from_integer(1.into()));
        assert_eq!(h2_s.coeff(&pair), q.clone());
        let h11 = o.macdonald(&pair).unwrap();
        let h11_s = o.convert(&h11, Basis::Schur).unwrap();
        assert_eq!(h11_s.coeff(&two), BigRational::from_integer(1.into()));
        assert_eq!(h11_s.coeff(&pair), t.clone());

        // The smallest nontrivial delta pairing.
        let d = o.delta(Generator::Elementary(2), &SymFunc::elementary(2)).unwrap();
        let v = o.hall(&d, &SymFunc::schur(pair.clone())).unwrap();
        assert_eq!(v, q + t);

        // Schur orthonormality through degree 5.
        for degree in 1..=5usize {
            let shapes = partitions_of(degree);
            for a in &shapes {
                for b in &shapes {
                    let value = o
                        .hall(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone()))
                        .unwrap();
                    let expected = if a == b {
                        BigRational::from_integer(1.into())
                    } else {
                        BigRational::from_integer(0.into())
                    };
                    assert_eq!(value, expected, "<s_{a:?}, s_{b:?}> at {point:?}");
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "PASS criterion 5: Macdonald pins, the degree-2 delta pairing, and Schur \
         orthonormality through degree 5 at {} points in {elapsed:?}",
        pts.len()
    );
}

#[test]
fn criterion_6_scalar_identities() {
    let start = Instant::now();
    let pts = points();
    let mut pool = OraclePool::new(8);
    let mut tuples = 0u64;
    for m in 0..=6usize {
        for n in 0..=6 - m {
            for k in 0..=n {
                let rep = check_identity_1(&mut pool, m, n, k, &pts).unwrap();
                assert!(rep.equal, "identity1 at ({m}, {n}, {k}): {rep:?}");
                let rep = check_identity_2(&mut pool, m, n, k, &pts).unwrap();
                assert!(rep.equal, "identity2 at ({m}, {n}, {k}): {rep:?}");
                for r in 1..=m + 1 {
                    let rep = check_lemma(&mut pool, m, n, r, k, &pts).unwrap();
                    assert!(rep.equal, "lemma at ({m}, {n}, {r}, {k}): {rep:?}");
                    tuples += 1;
                }
                let rep = check_final(&mut pool, m, n, k, &pts).unwrap();
                assert!(rep.equal, "final at ({m}, {n}, {k}): {rep:?}");
                tuples += 3;
            }
        }
    }
    let mut certified = 0u64;
    for m in 0..=5usize {
        for n in 0..=5 - m {
            for k in 0..=n {
                let rep = check_final_certified(&mut pool, m, n, k, &pts).unwrap();
                assert!(rep.equal, "certified final at ({m}, {n}, {k})");
                assert_eq!(rep.combinatorial, rep.interpolated);
                certified += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}, budget 10 min");
    println!(
        "PASS criterion 6: {tuples} identity tuples at {} points, {certified} \
         interpolation certificates, in {elapsed:?}",
        pts.len()
    );
}

#[test]
fn criterion_7_pmaj_conjecture_report() {
    let start = Instant::now();
    let pts = points();
    let mut pool = OraclePool::new(8);
    let mut contents = 0usize;
    for m in 0..=4usize {
        for n in 0..=4 - m {
            for k in 0..=n {
                let rep = check_pmaj_conjecture(&mut pool, m, n, k, &pts).unwrap();
                assert!(rep.equal, "pmaj conjecture at ({m}, {n}, {k}): {rep:?}");
                contents += rep.contents.len();
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "PASS criterion 7: pmaj conjecture equal on {contents} (m, n, k, content) \
         combinations at {} points in {elapsed:?}",
        pts.len()
    );
}

#[test]
fn criterion_8_narayana_symmetry() {
    let start = Instant::now();
    for m in 1..=5usize {
        for n in 1..=5usize {
            let poly = brute_enumerator(&EnumeratorQuery::plain(Family::ValleyPolyomino, m, n, 0))
                .unwrap();
            assert_eq!(poly, poly.swap_qt(), "area/bounce enumerator at ({m}, {n})");
        }
    }
    let elapsed = start.elapsed();
    println!("PASS criterion 8: area/bounce enumerators q<->t symmetric up to 5 x 5 in {elapsed:?}");
}

#[test]
fn criterion_9_performance_floor() {
    let start = Instant::now();
    let poly = brute_enumerator(&EnumeratorQuery::plain(Family::ValleyPolyomino, 7, 7, 0)).unwrap();
    let elapsed = start.elapsed();
    let one = BigRational::from_integer(1.into());
    let objects = poly.eval(&one, &one);
    assert!(!poly.is_zero());
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10 s");
    println!("PASS criterion 9: 7 x 7 area/bounce enumerator over {objects} objects in {elapsed:?}");
}
