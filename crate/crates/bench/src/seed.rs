use anysort_core::Permutation;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial. Depends only on its three arguments, so every
/// algorithm sees the same list for a given trial index.
pub fn trial_seed(master: u64, n: usize, trial: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ n as u64) ^ trial)
}

/// Uniformly random permutation of `1..=n`.
pub fn random_permutation(seed: u64, n: usize) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks: Vec<usize> = (1..=n).collect();
    ranks.shuffle(&mut rng);
    Permutation::new(ranks).expect("shuffled identity is a permutation")
}

pub fn trial_permutation(master: u64, n: usize, trial: u64) -> Permutation {
    random_permutation(trial_seed(master, n, trial), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_item() {
        assert_eq!(random_permutation(7, 1).ranks(), &[1]);
    }

    #[test]
    fn seeds_separate_sizes_and_trials() {
        let a = trial_seed(1, 10, 0);
        assert_ne!(a, trial_seed(1, 10, 1));
        assert_ne!(a, trial_seed(1, 11, 0));
        assert_ne!(a, trial_seed(2, 10, 0));
        assert_eq!(trial_permutation(3, 50, 9), trial_permutation(3, 50, 9));
    }
}
