use lorenz_core::harness::verify_word;
use lorenz_core::{Letter, LorenzWord};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn random_long_words_pass_every_check() {
    let mut rng = StdRng::seed_from_u64(0x10_2e_42);
    let mut tested = 0;
    while tested < 1000 {
        let len = rng.random_range(13..=24);
        let letters = (0..len)
            .map(|_| {
                if rng.random_bool(0.5) {
                    Letter::X
                } else {
                    Letter::Y
                }
            })
            .collect();
        let Ok(word) = LorenzWord::from_letters(letters) else {
            continue;
        };
        let report = verify_word(&word);
        assert!(report.passed(), "{word}: {:?}", report.first_failure());
        tested += 1;
    }
}
