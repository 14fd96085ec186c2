//! Sweedler's 4-dimensional Hopf algebra (Taft algebra at l = 2): the
//! canonical non-unimodular pivotal example. Basis {1, g, x, gx} with
//! g^2 = 1, x^2 = 0, xg = -gx; pivot g.

use std::sync::Arc;

use super::BuildError;
use crate::field::Field;
use crate::hopf::{HopfAlgebra, HopfPresentation};
use crate::matrix::Matrix;

pub fn build_sweedler(field: &Field) -> Result<Arc<HopfAlgebra>, BuildError> {
    if field.characteristic() == 2 {
        return Err(BuildError::UnsupportedParameter(
            "Sweedler algebra needs -1 != 1 (characteristic 2 excluded)".into(),
        ));
    }
    let f = field;
    let one = f.one();
    let neg = f.from_i64(-1);
    // Indices: 0 = 1, 1 = g, 2 = x, 3 = gx.
    let mult = vec![
        // 1 * ...
        vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(2, one.clone())],
            vec![(3, one.clone())],
        ],
        // g * ...
        vec![
            vec![(1, one.clone())],
            vec![(0, one.clone())],
            vec![(3, one.clone())],
            vec![(2, one.clone())],
        ],
        // x * ...: x*g = -gx, x*x = 0, x*gx = 0
        vec![
            vec![(2, one.clone())],
            vec![(3, neg.clone())],
            vec![],
            vec![],
        ],
        // gx * ...: gx*g = -x, gx*x = 0, gx*gx = 0
        vec![
            vec![(3, one.clone())],
            vec![(2, neg.clone())],
            vec![],
            vec![],
        ],
    ];
    let comult = vec![
        vec![(0, 0, one.clone())],
        vec![(1, 1, one.clone())],
        // Delta(x) = x (x) 1 + g (x) x
        vec![(2, 0, one.clone()), (1, 2, one.clone())],
        // Delta(gx) = gx (x) g + 1 (x) gx
        vec![(3, 1, one.clone()), (0, 3, one.clone())],
    ];
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x.
    let mut antipode = Matrix::zero(4, 4, f);
    *antipode.at_mut(0, 0) = f.one();
    *antipode.at_mut(1, 1) = f.one();
    *antipode.at_mut(3, 2) = f.from_i64(-1);
    *antipode.at_mut(2, 3) = f.one();
    let mut pivot = vec![f.zero(); 4];
    pivot[1] = f.one();
    let pres = HopfPresentation {
        name: "sweedler".into(),
        field: f.clone(),
        dim: 4,
        basis_labels: vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mult,
        unit: vec![f.one(), f.zero(), f.zero(), f.zero()],
        counit: vec![f.one(), f.one(), f.zero(), f.zero()],
        comult,
        antipode,
        pivot,
        generators: vec![1, 2],
    };
    Ok(HopfAlgebra::new(pres)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Side;

    #[test]
    fn builds_over_f3_and_q() {
        for f in [Field::prime(3).unwrap(), Field::rational()] {
            let h = build_sweedler(&f).unwrap();
            assert_eq!(h.dim(), 4);
        }
    }

    #[test]
    fn characteristic_two_rejected() {
        assert!(build_sweedler(&Field::prime(2).unwrap()).is_err());
    }

    #[test]
    fn not_unimodular() {
        for f in [Field::prime(3).unwrap(), Field::rational()] {
            let h = build_sweedler(&f).unwrap();
            let left = h.integral_space(Side::Left).unwrap();
            let right = h.integral_space(Side::Right).unwrap();
            assert_eq!(left.basis.len(), 1);
            assert_eq!(right.basis.len(), 1);
            assert!(!h.is_unimodular().unwrap());
        }
    }

    #[test]
    fn antipode_squares_to_pivot_conjugation_not_identity() {
        let h = build_sweedler(&Field::prime(3).unwrap()).unwrap();
        let s = &h.presentation().antipode;
        let s2 = s.mul(s).unwrap();
        assert!(!s2.is_identity()); // S^2(x) = -x
    }
}
