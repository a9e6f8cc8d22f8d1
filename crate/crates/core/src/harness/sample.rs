use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::Matrix;
use crate::ring::InvolutiveRing;
use crate::section::InvariantTuple;

/// Independent deterministic stream `index` derived from `seed`.
///
/// Item `i` of every sampler draws from `substream_rng(seed, i)`, so streams
/// can be split across threads without changing their content.
pub fn substream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One element of `u_n`: entries strictly before their mirror
/// `(n+1-j, n+1-i)` are free, mirrored entries are `-sigma` of them, and
/// self-mirrored anti-diagonal entries are trace-zero.
pub fn random_lie_element<R: InvolutiveRing>(ring: &R, n: usize, rng: &mut ChaCha8Rng) -> Matrix<R::El> {
    let mut grid: Vec<Vec<Option<R::El>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mirror = (n - 1 - j, n - 1 - i);
            let value = match (i, j).cmp(&mirror) {
                std::cmp::Ordering::Less => ring.random_element(rng),
                std::cmp::Ordering::Equal => ring.random_trace_zero(rng),
                std::cmp::Ordering::Greater => {
                    let free = grid[mirror.0][mirror.1].as_ref().expect("mirror filled first");
                    ring.neg(&ring.sigma(free))
                }
            };
            grid[i][j] = Some(value);
        }
    }
    Matrix::from_fn(n, |i, j| grid[i][j].clone().expect("filled"))
}

/// `count` seeded samples of `u_n`.
pub fn sample_u_n<'a, R: InvolutiveRing>(
    ring: &'a R,
    n: usize,
    count: usize,
    seed: u64,
) -> impl Iterator<Item = Matrix<R::El>> + 'a {
    (0..count as u64).map(move |i| random_lie_element(ring, n, &mut substream_rng(seed, i)))
}

/// Random `(a_1, ..., a_n)` with `a_k` trace-zero for odd `k`, sigma-fixed for even `k`.
pub fn random_invariant_tuple<R: InvolutiveRing>(ring: &R, n: usize, rng: &mut ChaCha8Rng) -> InvariantTuple<R::El> {
    let a = (1..=n)
        .map(|k| {
            if k % 2 == 1 {
                ring.random_trace_zero(rng)
            } else {
                ring.random_fixed(rng)
            }
        })
        .collect();
    InvariantTuple::new(ring, a).expect("parity holds by construction")
}

pub fn random_matrix<R: InvolutiveRing>(ring: &R, n: usize, rng: &mut ChaCha8Rng) -> Matrix<R::El> {
    Matrix::from_fn(n, |_, _| ring.random_element(rng))
}
