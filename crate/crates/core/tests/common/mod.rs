#![allow(dead_code)]

use hamweave_core::hamiltonians::{dense_h1, dense_h2};
use hamweave_core::qcore::{dense_expm_hermitian, CMatrix, DenseUnitary, Mat2, StateVector, C64};
use hamweave_core::{EvolutionTime, HamiltonianSpec, Schedule, Segment, Which};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_spec(rng: &mut StdRng, n: usize) -> HamiltonianSpec {
    let mut draw = |k: usize| {
        (0..k)
            .map(|_| rng.gen_range(0.2..2.0))
            .collect::<Vec<f64>>()
    };
    let (a, b, c) = (draw(n), draw(n), draw(n - 1));
    HamiltonianSpec::new(n, a, b, c).unwrap()
}

pub fn random_state(rng: &mut StdRng, n: usize) -> StateVector {
    let amps = (0..1usize << n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector::from_amplitudes(n, amps).unwrap()
}

pub fn random_schedule(rng: &mut StdRng, len: usize, max_t: f64) -> Schedule {
    Schedule::from_segments(
        (0..len)
            .map(|_| {
                let h = if rng.gen_bool(0.5) {
                    Which::H1
                } else {
                    Which::H2
                };
                Segment::new(
                    h,
                    EvolutionTime::from_time(rng.gen_range(0.0..max_t)).unwrap(),
                )
            })
            .collect(),
    )
}

pub fn mat2(m: &Mat2) -> CMatrix {
    CMatrix::from_mat2(m)
}

/// `op` on `qubit` of `n` (qubit 1 leftmost), as an explicit Kronecker product.
pub fn embed(n: usize, qubit: usize, op: &CMatrix) -> CMatrix {
    let mut out = CMatrix::identity(1);
    let mut q = 1;
    while q <= n {
        if q == qubit {
            out = out.kron(op);
            q += op.dim().trailing_zeros() as usize;
        } else {
            out = out.kron(&CMatrix::identity(2));
            q += 1;
        }
    }
    out
}

/// Ordered product of dense exponentials: the oracle for schedule execution.
pub fn dense_schedule(spec: &HamiltonianSpec, schedule: &Schedule) -> CMatrix {
    let h1 = dense_h1(spec).unwrap();
    let h2 = dense_h2(spec).unwrap();
    let mut u = CMatrix::identity(1 << spec.n());
    for s in &schedule.segments {
        let h = match s.hamiltonian {
            Which::H1 => &h1,
            Which::H2 => &h2,
        };
        u = dense_expm_hermitian(h, s.duration.time())
            .unwrap()
            .matrix()
            .matmul(&u);
    }
    u
}

pub fn unitary(m: CMatrix) -> DenseUnitary {
    let n = m.dim().trailing_zeros() as usize;
    DenseUnitary::new(n, m).unwrap()
}

/// Largest entrywise difference after removing the best global phase
/// (aligned on the largest entry of `b`).
pub fn diff_up_to_phase(a: &CMatrix, b: &CMatrix) -> f64 {
    let (idx, _) = b
        .as_slice()
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .unwrap();
    let phase = a.as_slice()[idx] / b.as_slice()[idx];
    let phase = phase / phase.norm();
    a.max_abs_diff(&b.scale(phase))
}

pub fn vec_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

use hamweave_core::compiler::{Primitive, Term};
use hamweave_core::CompilerConfig;

/// Residual angles `B^{-(e-s)}·target` on the terms weaker than the one the
/// primitive selects, computed from the coefficient rule alone.
pub fn weaker_residuals(p: Primitive, cfg: &CompilerConfig) -> Vec<(Term, f64)> {
    let n = cfg.n();
    let b = cfg.base() as f64;
    let (s, target) = match p {
        Primitive::Hadamard(m) => (m as i32 - 1, std::f64::consts::PI / 2.0),
        Primitive::T(m) => (2 * m as i32 - 2, std::f64::consts::PI / 8.0),
        Primitive::Zz(m) => (2 * m as i32 - 1, 3.0 * std::f64::consts::PI / 4.0),
    };
    let terms: Vec<(Term, i32)> = match p {
        Primitive::Hadamard(_) => (1..=n).map(|j| (Term::A(j), j as i32 - 1)).collect(),
        _ => (1..=n)
            .map(|j| (Term::B(j), 2 * j as i32 - 2))
            .chain((1..n).map(|j| (Term::C(j), 2 * j as i32 - 1)))
            .collect(),
    };
    terms
        .into_iter()
        .filter(|&(_, e)| e > s)
        .map(|(t, e)| (t, b.powi(s - e) * target))
        .collect()
}

/// Closed-form phase-invariant fidelity of a compiled primitive against its
/// ideal gate. For `H` the residuals are independent single-qubit rotations
/// with trace `cos θ`, so the fidelity is `Π cos θ_j`. For the diagonal
/// `H2` gates it is `|2^{-n} Σ_x exp(-i Σ_k θ_k s_k(x))|` over sign patterns.
pub fn closed_form_fidelity(p: Primitive, cfg: &CompilerConfig) -> f64 {
    let res = weaker_residuals(p, cfg);
    if let Primitive::Hadamard(_) = p {
        return res.iter().map(|(_, th)| th.cos()).product();
    }
    let n = cfg.n();
    let mut acc = C64::new(0.0, 0.0);
    for x in 0..1usize << n {
        let z = |j: usize| if (x >> (n - j)) & 1 == 0 { 1.0 } else { -1.0 };
        let phase: f64 = res
            .iter()
            .map(|&(t, th)| match t {
                Term::B(j) => th * z(j),
                Term::C(j) => th * z(j) * z(j + 1),
                Term::A(_) => unreachable!(),
            })
            .sum();
        acc += C64::from_polar(1.0, -phase);
    }
    acc.norm() / (1usize << n) as f64
}

/// Every primitive of a config: H and T on every qubit, ZZ on every pair.
pub fn all_primitives(n: usize) -> Vec<Primitive> {
    (1..=n)
        .map(Primitive::Hadamard)
        .chain((1..=n).map(Primitive::T))
        .chain((1..n).map(Primitive::Zz))
        .collect()
}

/// Brute-force 4×4 check of `(I⊗H)·e^{iπZZ/4}·(T²⊗T²)·(I⊗H)` against CNOT,
/// built entry by entry without the library's gate constants.
pub fn cnot_identity_error() -> f64 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let r = |x: f64| C64::new(x, 0.0);
    let z = C64::new(0.0, 0.0);
    let h = [[r(s), r(s)], [r(s), r(-s)]];
    let ih = CMatrix::from_row_major(
        4,
        vec![
            h[0][0], h[0][1], z, z, //
            h[1][0], h[1][1], z, z, //
            z, z, h[0][0], h[0][1], //
            z, z, h[1][0], h[1][1],
        ],
    )
    .unwrap();
    let pi = std::f64::consts::PI;
    // Z⊗Z eigenvalues on 00, 01, 10, 11.
    let zz = [1.0, -1.0, -1.0, 1.0];
    let ezz = CMatrix::from_diagonal(&zz.map(|v| C64::from_polar(1.0, pi / 4.0 * v)));
    // T² = diag(e^{-iπ/4}, e^{iπ/4}); T²⊗T² phases add.
    let t2 = [-pi / 4.0, pi / 4.0];
    let tt = CMatrix::from_diagonal(
        &[0, 1, 2, 3].map(|i: usize| C64::from_polar(1.0, t2[i >> 1] + t2[i & 1])),
    );
    let product = ih.matmul(&ezz).matmul(&tt).matmul(&ih);
    let mut cnot = CMatrix::zeros(4);
    for (row, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        cnot[(row, col)] = r(1.0);
    }
    diff_up_to_phase(&product, &cnot)
}

use hamweave_core::{Circuit, Gate};

/// Random circuit over `{H, T, CNOT}`; CNOT endpoints are any distinct pair
/// when `long_cnots`, otherwise nearest neighbours.
pub fn random_circuit(r: &mut impl Rng, n: usize, len: usize, long_cnots: bool) -> Circuit {
    let gates = (0..len)
        .map(|_| match r.gen_range(0..if n > 1 { 3 } else { 2 }) {
            0 => Gate::H(r.gen_range(1..=n)),
            1 => Gate::T(r.gen_range(1..=n)),
            _ => {
                let control = r.gen_range(1..=n);
                let target = if long_cnots {
                    let mut t = r.gen_range(1..=n);
                    while t == control {
                        t = r.gen_range(1..=n);
                    }
                    t
                } else if control == n || (control > 1 && r.gen_bool(0.5)) {
                    control - 1
                } else {
                    control + 1
                };
                Gate::Cnot { control, target }
            }
        })
        .collect();
    Circuit::new(n, gates).unwrap()
}
