use lorenz_core::harness::{enumerate_words, verify_corpus, Execution};
use lorenz_core::invariants::closed_form_invariants;
use lorenz_core::OrbitCombinatorics;

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Primitive binary necklaces of length `n` by Möbius inversion.
fn primitive_necklaces(n: usize) -> usize {
    let sum: i64 = (1..=n)
        .filter(|&d| n.is_multiple_of(d))
        .map(|d| mobius(d) * (1i64 << (n / d)))
        .sum();
    (sum / n as i64) as usize
}

#[test]
fn enumeration_matches_necklace_count() {
    let words = enumerate_words(14, true).unwrap();
    for len in 2..=14 {
        let got = words.iter().filter(|w| w.len() == len).count();
        assert_eq!(got, primitive_necklaces(len), "length {len}");
    }
    let mut sorted = words.clone();
    sorted.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    assert_eq!(sorted, words);
}

#[test]
fn every_word_to_length_twelve_passes() {
    let summary = verify_corpus(12, Execution::Serial).unwrap();
    assert_eq!(summary.words, 745);
    assert!(summary.all_passed, "{:#?}", summary.failures);
    eprintln!(
        "{} words, {} with a start-dependent trace count",
        summary.words, summary.start_dependent_words
    );
}

#[test]
fn trip_number_one_words_are_unknots() {
    for w in enumerate_words(12, true)
        .unwrap()
        .into_iter()
        .filter(|w| w.trip_number() == 1)
    {
        let r = closed_form_invariants(&OrbitCombinatorics::new(&w)).unwrap();
        assert_eq!(r.unknotting, 0, "{w}");
    }
}
