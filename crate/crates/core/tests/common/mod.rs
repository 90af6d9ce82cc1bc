#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use colalg::{Bicharacter, Builtin, Field, GradedAlgebraObject, GradedBasis, GradingGroup, MultilinearOp, Scalar};

pub fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let n = rng.gen_range(-3i64..=3);
    let d = rng.gen_range(1i64..=2);
    Scalar::ratio(n, d)
}

/// A `Z2`-graded object of dimension `n` whose operations have random
/// degree-respecting constants.
pub fn random_object(seed: u64, n: usize, ops: &[(&str, usize)]) -> GradedAlgebraObject {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = GradingGroup::z2();
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let degrees: Vec<[i64; 1]> = (0..n).map(|_| [rng.gen_range(0..2)]).collect();
    let layout: Vec<(&str, &[i64])> = names.iter().zip(&degrees).map(|(s, d)| (s.as_str(), &d[..])).collect();
    let basis = GradedBasis::from_degrees(&g, &layout).unwrap();
    let bc = Bicharacter::builtin(Builtin::Z2, &g).unwrap();
    let mut obj = GradedAlgebraObject::new(Field::Rationals, basis, bc);
    for &(name, arity) in ops {
        let mut op = MultilinearOp::algebra(arity);
        for _ in 0..2 * n {
            let args: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..n)).collect();
            let d = obj.basis.degree_sum(&args);
            let outs: Vec<usize> = (0..n).filter(|&t| *obj.degree(t) == d).collect();
            if outs.is_empty() {
                continue;
            }
            let t = outs[rng.gen_range(0..outs.len())];
            op.add_constant(&args, t, &small_scalar(&mut rng));
        }
        obj.set_op(name, op);
    }
    obj
}
