use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

use num_complex::Complex64;
use proptest::prelude::*;
use qaxis::grover::{diffusion, superposition};
use qaxis::random::random_circuit;
use qaxis::sim::{empirical, run_from, Statevector};
use qaxis::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Plain 2×2 product written out longhand.
fn mul2(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

#[test]
fn decomposed_h_matches_longhand_product() {
    // oracle: RZ(π/2)·SX·RZ(π/2) by hand
    let rz = [
        [Complex64::from_polar(1.0, -FRAC_PI_4), c(0.0, 0.0)],
        [c(0.0, 0.0), Complex64::from_polar(1.0, FRAC_PI_4)],
    ];
    let sx = [[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]];
    let expected = mul2(rz, mul2(sx, rz));
    let s = FRAC_1_SQRT_2;
    let phase = Complex64::from_polar(1.0, -FRAC_PI_4);
    let h = [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]];
    for i in 0..2 {
        for j in 0..2 {
            assert!((expected[i][j] - phase * h[i][j]).norm() < 1e-15);
        }
    }

    let circuit = Circuit::from_ops(
        1,
        [
            Instruction::new(GateKind::Rz(FRAC_PI_2), vec![0]),
            Instruction::new(GateKind::Sx, vec![0]),
            Instruction::new(GateKind::Rz(FRAC_PI_2), vec![0]),
        ],
    )
    .unwrap();
    let u = unitary(&circuit).unwrap();
    for (i, row) in expected.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            assert!((u.get(i, j) - e).norm() < 1e-15);
        }
    }
}

#[test]
fn norm_preserved_over_long_circuits() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [1, 5, 10] {
        let circuit = random_circuit(&mut rng, n, 10_000);
        let s = run(&circuit).unwrap();
        assert!((s.norm() - 1.0).abs() <= 1e-10, "n={n} norm={}", s.norm());
    }
}

#[test]
fn run_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let circuit = random_circuit(&mut rng, 6, 400);
    assert_eq!(run(&circuit).unwrap(), run(&circuit).unwrap());
}

#[test]
fn run_agrees_with_unitary_columns() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let circuit = random_circuit(&mut rng, 3, 25);
        let u = unitary(&circuit).unwrap();
        for col in 0..8 {
            let s = run_from(&circuit, Statevector::basis(3, col).unwrap()).unwrap();
            for row in 0..8 {
                assert!((u.get(row, col) - s.amplitudes()[row]).norm() < 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unitary_composes_in_time_order(seed in any::<u64>(), n in 1usize..=4, l1 in 0usize..15, l2 in 0usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_circuit(&mut rng, n, l1);
        let b = random_circuit(&mut rng, n, l2);
        let joined = unitary(&a.then(&b).unwrap()).unwrap();
        let product = unitary(&b).unwrap().mul(&unitary(&a).unwrap()).unwrap();
        prop_assert!(joined.max_deviation(&product).unwrap() <= 1e-12);
    }

    #[test]
    fn equivalence_is_reflexive_and_symmetric(seed in any::<u64>(), phi in -3.0f64..3.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = unitary(&random_circuit(&mut rng, 3, 12)).unwrap();
        let b = a.scale(Complex64::from_polar(1.0, phi));
        let r = equiv_global_phase(&a, &a, 1e-12).unwrap();
        prop_assert!(r.equal && r.phase.abs() < 1e-12);
        let ab = equiv_global_phase(&a, &b, 1e-9).unwrap();
        let ba = equiv_global_phase(&b, &a, 1e-9).unwrap();
        prop_assert!(ab.equal && ba.equal);
        prop_assert!((ab.phase + phi).abs() < 1e-9);
        prop_assert!((ba.phase - phi).abs() < 1e-9);
    }

    #[test]
    fn equivalence_is_transitive(seed in any::<u64>(), p1 in -1.5f64..1.5, p2 in -1.5f64..1.5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = unitary(&random_circuit(&mut rng, 2, 10)).unwrap();
        let b = a.scale(Complex64::from_polar(1.0, p1));
        let cm = b.scale(Complex64::from_polar(1.0, p2));
        prop_assert!(equiv_global_phase(&a, &b, 1e-9).unwrap().equal);
        prop_assert!(equiv_global_phase(&b, &cm, 1e-9).unwrap().equal);
        prop_assert!(equiv_global_phase(&a, &cm, 1e-9).unwrap().equal);
    }

    #[test]
    fn probabilities_ignore_global_phase(seed in any::<u64>(), phi in -3.2f64..3.2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = run(&random_circuit(&mut rng, 4, 30)).unwrap();
        let d1 = probabilities(&s);
        let d2 = probabilities(&s.with_global_phase(phi));
        prop_assert!(tvd(&d1, &d2).unwrap() <= 1e-14);
        prop_assert!((d1.total() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn mcz_keeps_every_modulus(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let prep = random_circuit(&mut rng, 4, 20);
        let before = run(&prep).unwrap();
        let after = run(&prep.append(Instruction::new(GateKind::Mcz(3), vec![3, 0, 2])).unwrap()).unwrap();
        for (a, b) in before.amplitudes().iter().zip(after.amplitudes()) {
            prop_assert!((a.norm() - b.norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn tvd_is_symmetric_and_bounded(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = probabilities(&run(&random_circuit(&mut ChaCha8Rng::seed_from_u64(s1), 3, 20)).unwrap());
        let b = probabilities(&run(&random_circuit(&mut ChaCha8Rng::seed_from_u64(s2), 3, 20)).unwrap());
        let ab = tvd(&a, &b).unwrap();
        prop_assert!((ab - tvd(&b, &a).unwrap()).abs() < 1e-15);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&ab));
    }
}

#[test]
fn grover_n4_exact_values() {
    // 121/256 = sin²(3·arcsin(1/4)), 9/256 = (1 - 121/256) / 15
    for axis in [Axis::X, Axis::Y] {
        let c = build_grover(&GroverSpec::new(4, "1111", 1, axis)).unwrap();
        let d = probabilities(&run(&c).unwrap());
        assert!((d.get("1111") - 0.47265625).abs() <= 1e-9);
        for (k, p) in d.iter() {
            if k != "1111" {
                assert!((p - 0.03515625).abs() <= 1e-9, "{k}: {p}");
            }
        }
        assert_eq!(d.len(), 16);
    }
}

#[test]
fn seeded_sample_close_to_exact() {
    let c = build_grover(&GroverSpec::new(4, "1111", 1, Axis::Y)).unwrap();
    let exact = probabilities(&run(&c).unwrap());
    let counts = sample(&exact, 1024, 7).unwrap();
    assert_eq!(counts.values().sum::<u64>(), 1024);
    let emp = empirical(4, &counts);
    assert!(tvd(&emp, &exact).unwrap() <= 0.06);
}

/// `I - 2|s⟩⟨s|` as a dense matrix.
fn reflection(s: &Statevector) -> Matrix {
    let amps = s.amplitudes();
    let d = amps.len();
    let rows: Vec<Vec<Complex64>> = (0..d)
        .map(|r| {
            (0..d)
                .map(|col| {
                    let id = if r == col { 1.0 } else { 0.0 };
                    c(id, 0.0) - 2.0 * amps[r] * amps[col].conj()
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(&rows).unwrap()
}

#[test]
fn diffusion_reflects_about_initial_state() {
    for n in 2..=4 {
        for axis in [Axis::X, Axis::Y] {
            let s = run(&Circuit::from_ops(n, superposition(n, axis)).unwrap()).unwrap();
            let d = unitary(&Circuit::from_ops(n, diffusion(n, axis)).unwrap()).unwrap();
            let r = equiv_global_phase(&d, &reflection(&s), 1e-12).unwrap();
            assert!(r.equal, "n={n} axis={axis:?} residual={}", r.residual);
        }
    }
}

#[test]
fn y_axis_superposition_has_y_bloch_vectors() {
    let c = Circuit::from_ops(1, superposition(1, Axis::Y)).unwrap();
    let b = bloch(&run(&c).unwrap()).unwrap();
    assert!(b.x.abs() < 1e-12 && (b.y + 1.0).abs() < 1e-12 && b.z.abs() < 1e-12);
}
