//! Drinfeld double D(kG) of a group algebra: basis {delta_x (x) y} with the
//! standard smash-product structure. S^2 = id, so pivot = 1 works.

use std::sync::Arc;

use super::group::GroupTable;
use super::BuildError;
use crate::field::Field;
use crate::hopf::{HopfAlgebra, HopfPresentation};
use crate::matrix::Matrix;

pub fn build_drinfeld_double_group(
    field: &Field,
    g: &GroupTable,
) -> Result<Arc<HopfAlgebra>, BuildError> {
    g.validate()?;
    let f = field;
    let m = g.order;
    let n = m * m;
    let idx = |x: usize, y: usize| x * m + y;
    let e = g.identity;

    // (delta_x (x) y)(delta_x' (x) y') = [x' = y^{-1} x y] delta_x (x) yy'.
    let mut mult = vec![vec![Vec::new(); n]; n];
    for x in 0..m {
        for y in 0..m {
            let yinv = g.inverse(y);
            let xconj = g.table[g.table[yinv][x]][y]; // y^{-1} x y
            for yp in 0..m {
                mult[idx(x, y)][idx(xconj, yp)] = vec![(idx(x, g.table[y][yp]), f.one())];
            }
        }
    }

    // Delta(delta_x (x) y) = sum_{ab=x} (delta_a (x) y) (x) (delta_b (x) y).
    let mut comult = vec![Vec::new(); n];
    for x in 0..m {
        for y in 0..m {
            let cell = &mut comult[idx(x, y)];
            for a in 0..m {
                let b = g.table[g.inverse(a)][x]; // a^{-1} x, so ab = x
                cell.push((idx(a, y), idx(b, y), f.one()));
            }
        }
    }

    // unit = sum_x delta_x (x) e; eps(delta_x (x) y) = [x = e].
    let mut unit = vec![f.zero(); n];
    let mut counit = vec![f.zero(); n];
    for x in 0..m {
        unit[idx(x, e)] = f.one();
        counit[idx(e, x)] = f.one();
    }

    // S(delta_x (x) y) = delta_{y^{-1} x^{-1} y} (x) y^{-1}.
    let mut antipode = Matrix::zero(n, n, f);
    for x in 0..m {
        for y in 0..m {
            let yinv = g.inverse(y);
            let target = g.table[g.table[yinv][g.inverse(x)]][y];
            *antipode.at_mut(idx(target, yinv), idx(x, y)) = f.one();
        }
    }

    // Generators: every delta_x (x) s for s in the group generators, plus the
    // delta_x (x) e idempotents to reach words ending at the identity early.
    let mut generators = Vec::new();
    for x in 0..m {
        generators.push(idx(x, e));
        for &s in &g.generators {
            generators.push(idx(x, s));
        }
    }

    let labels = (0..m)
        .flat_map(|x| {
            let gl = g.labels.clone();
            let lx = g.labels[x].clone();
            gl.into_iter().map(move |ly| format!("d[{lx}]{ly}"))
        })
        .collect();

    let pres = HopfPresentation {
        name: format!("D(kG_{m})"),
        field: f.clone(),
        dim: n,
        basis_labels: labels,
        mult,
        unit: unit.clone(),
        counit,
        comult,
        antipode,
        pivot: unit,
        generators,
    };
    Ok(HopfAlgebra::new(pres)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_of_z2_over_f2() {
        let f = Field::prime(2).unwrap();
        let d = build_drinfeld_double_group(&f, &GroupTable::cyclic(2)).unwrap();
        assert_eq!(d.dim(), 4);
        assert!(d.is_unimodular().unwrap());
    }

    #[test]
    fn double_of_s3_over_f2_is_unimodular() {
        let f = Field::prime(2).unwrap();
        let d = build_drinfeld_double_group(&f, &GroupTable::symmetric3()).unwrap();
        assert_eq!(d.dim(), 36);
        assert!(d.is_unimodular().unwrap());
        // S^2 = identity on the full basis.
        let s = &d.presentation().antipode;
        assert!(s.mul(s).unwrap().is_identity());
    }

    #[test]
    fn double_of_z3_over_q() {
        let d = build_drinfeld_double_group(&Field::rational(), &GroupTable::cyclic(3)).unwrap();
        assert_eq!(d.dim(), 9);
        assert!(d.is_unimodular().unwrap());
    }
}
