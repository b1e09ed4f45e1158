//! The documented sampling algorithm, re-implemented by hand. If the backing
//! crate ever changes its stream, these fail before any pinned fixture does.

use minkowski_trace::states::SampleStream;
use minkowski_trace::RngSeed;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Xoshiro([u64; 4]);

impl Xoshiro {
    fn seeded(seed: u64) -> Self {
        let mut sm = seed;
        Self([0; 4].map(|_| splitmix64(&mut sm)))
    }

    fn next(&mut self) -> u64 {
        let s = &mut self.0;
        let out = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        out
    }
}

#[test]
fn stream_matches_reference_generator() {
    for seed in [0u64, 1, 7, 42, u64::MAX] {
        let mut ours = SampleStream::new(RngSeed(seed));
        let mut reference = Xoshiro::seeded(seed);
        for _ in 0..64 {
            assert_eq!(ours.next_u64(), reference.next(), "seed {seed}");
        }
    }
}

#[test]
fn gaussians_follow_documented_box_muller() {
    let mut ours = SampleStream::new(RngSeed(2024));
    let mut reference = Xoshiro::seeded(2024);
    let mut uniform = || (reference.next() >> 11) as f64 / (1u64 << 53) as f64;
    for _ in 0..32 {
        let (u1, u2) = (uniform(), uniform());
        let r = (-2.0 * (1.0 - u1).ln()).sqrt();
        let angle = std::f64::consts::TAU * u2;
        let z = ours.complex_normal();
        assert_eq!(z.re, r * angle.cos() / std::f64::consts::SQRT_2);
        assert_eq!(z.im, r * angle.sin() / std::f64::consts::SQRT_2);
    }
}

#[test]
fn generators_are_pure_functions_of_the_seed() {
    use minkowski_trace::{random_density_matrix, random_hermitian, random_probability_grid};
    assert_eq!(
        random_density_matrix(5, 3, RngSeed(9)).unwrap(),
        random_density_matrix(5, 3, RngSeed(9)).unwrap()
    );
    assert_ne!(
        random_hermitian(4, 1.0, RngSeed(9)),
        random_hermitian(4, 1.0, RngSeed(10))
    );
    assert_eq!(
        random_probability_grid(3, 2, RngSeed(1)),
        random_probability_grid(3, 2, RngSeed(1))
    );
}
