//! Finite group tables and their group algebras kG with the standard Hopf
//! structure: group-likes, S(g) = g^{-1}, pivot = identity.

use std::sync::Arc;

use super::BuildError;
use crate::field::Field;
use crate::hopf::{HopfAlgebra, HopfPresentation};
use crate::linalg;
use crate::matrix::Matrix;
use crate::modcat::{ModRef, ModuleRep};

#[derive(Debug, Clone)]
pub struct GroupTable {
    pub order: usize,
    /// table[i][j] = index of g_i g_j.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub labels: Vec<String>,
    /// Indices of a generating subset.
    pub generators: Vec<usize>,
    /// Optional permutation realization (action of g_i on points).
    pub perms: Option<Vec<Vec<usize>>>,
}

impl GroupTable {
    pub fn validate(&self) -> Result<(), BuildError> {
        let m = self.order;
        let bad = |s: String| Err(BuildError::InvalidGroup(s));
        if m == 0 || self.table.len() != m || self.table.iter().any(|r| r.len() != m) {
            return bad("table shape mismatch".into());
        }
        if self
            .table
            .iter()
            .any(|r| r.iter().any(|&x| x >= m))
        {
            return bad("table index out of range".into());
        }
        if self.identity >= m || self.labels.len() != m {
            return bad("identity or labels invalid".into());
        }
        let e = self.identity;
        for i in 0..m {
            if self.table[e][i] != i || self.table[i][e] != i {
                return bad(format!("identity law fails at {i}"));
            }
            if !self.table[i].contains(&e) {
                return bad(format!("no inverse for element {i}"));
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]] {
                        return bad(format!("associativity fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        if self.generators.is_empty() || self.generators.iter().any(|&g| g >= m) {
            return bad("generator subset empty or out of range".into());
        }
        Ok(())
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order)
            .find(|&j| self.table[i][j] == self.identity)
            .expect("validated group has inverses")
    }

    /// Cyclic group Z/n with the rotation permutation realization.
    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let perms = (0..n)
            .map(|i| (0..n).map(|x| (x + i) % n).collect())
            .collect();
        GroupTable {
            order: n,
            table,
            identity: 0,
            labels: (0..n).map(|i| format!("g{i}")).collect(),
            generators: vec![if n > 1 { 1 } else { 0 }],
            perms: Some(perms),
        }
    }

    /// Symmetric group S3 as permutations of {0,1,2}.
    pub fn symmetric3() -> GroupTable {
        // Fixed element order: e, (01), (02), (12), (012), (021).
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ];
        let labels = vec!["e", "(01)", "(02)", "(12)", "(012)", "(021)"];
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> {
            (0..3).map(|x| p[q[x]]).collect()
        };
        let table = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        let r = compose(&perms[i], &perms[j]);
                        perms.iter().position(|p| *p == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        GroupTable {
            order: 6,
            table,
            identity: 0,
            labels: labels.into_iter().map(String::from).collect(),
            // A transposition and a 3-cycle generate S3.
            generators: vec![1, 4],
            perms: Some(perms),
        }
    }
}

/// kG with basis the group elements; every basis element is group-like.
pub fn build_group_algebra(field: &Field, g: &GroupTable) -> Result<Arc<HopfAlgebra>, BuildError> {
    g.validate()?;
    let f = field;
    let m = g.order;
    let one = f.one();
    let mult = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| vec![(g.table[i][j], one.clone())])
                .collect()
        })
        .collect();
    let comult = (0..m).map(|i| vec![(i, i, one.clone())]).collect();
    let mut antipode = Matrix::zero(m, m, f);
    for i in 0..m {
        *antipode.at_mut(g.inverse(i), i) = f.one();
    }
    let mut unit = vec![f.zero(); m];
    unit[g.identity] = f.one();
    let pres = HopfPresentation {
        name: format!("k[{}]", if m == 6 { "S3" } else { "G" }),
        field: f.clone(),
        dim: m,
        basis_labels: g.labels.clone(),
        mult,
        unit: unit.clone(),
        counit: vec![f.one(); m],
        comult,
        antipode,
        pivot: unit,
        generators: g.generators.clone(),
    };
    Ok(HopfAlgebra::new(pres)?)
}

/// The 2-dimensional sum-zero submodule of the 3-point permutation module of
/// S3, in the basis (e0 - e1, e1 - e2).
pub fn s3_natural_module(
    algebra: &Arc<HopfAlgebra>,
    g: &GroupTable,
) -> Result<ModRef, BuildError> {
    let f = algebra.field().clone();
    let perms = g
        .perms
        .as_ref()
        .ok_or_else(|| BuildError::InvalidGroup("no permutation realization".into()))?;
    if g.order != 6 || perms.iter().any(|p| p.len() != 3) {
        return Err(BuildError::InvalidGroup(
            "natural module requires the S3 table".into(),
        ));
    }
    // Columns of b: the sum-zero basis vectors inside the permutation module.
    let b = Matrix::from_i64_rows(&[vec![1, 0], vec![-1, 1], vec![0, -1]], &f);
    let mut action = Vec::with_capacity(6);
    for p in perms {
        let mut pm = Matrix::zero(3, 3, &f);
        for (j, &pj) in p.iter().enumerate() {
            *pm.at_mut(pj, j) = f.one();
        }
        // Restrict: solve b * x = pm * b (exact, the subspace is invariant).
        let rhs = pm.mul(&b).unwrap();
        let sol = linalg::solve_linear(&b, &rhs).unwrap();
        action.push(sol.solution.expect("sum-zero subspace is invariant"));
    }
    Ok(ModuleRep::new(algebra.clone(), action, "N")?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Side;
    use crate::modcat;

    #[test]
    fn cyclic_and_s3_tables_valid() {
        GroupTable::cyclic(2).validate().unwrap();
        GroupTable::cyclic(5).validate().unwrap();
        GroupTable::symmetric3().validate().unwrap();
    }

    #[test]
    fn bad_table_rejected() {
        let mut t = GroupTable::cyclic(3);
        t.table[1][1] = 1; // breaks associativity/inverses
        assert!(t.validate().is_err());
    }

    #[test]
    fn kz2_f3_and_ks3_f2_build_and_are_unimodular() {
        let z2 = build_group_algebra(&Field::prime(3).unwrap(), &GroupTable::cyclic(2)).unwrap();
        assert_eq!(z2.dim(), 2);
        assert!(z2.is_unimodular().unwrap());
        let s3 = build_group_algebra(&Field::prime(2).unwrap(), &GroupTable::symmetric3()).unwrap();
        assert_eq!(s3.dim(), 6);
        assert!(s3.is_unimodular().unwrap());
        // Integral = sum of all group elements.
        let li = s3.integral_space(Side::Left).unwrap();
        let f = s3.field();
        assert!(li.basis[0].iter().all(|c| c == &li.basis[0][0] && !f.is_zero(c)));
    }

    #[test]
    fn s3_natural_module_simple_dims() {
        let table = GroupTable::symmetric3();
        let f2 = Field::prime(2).unwrap();
        let alg = build_group_algebra(&f2, &table).unwrap();
        let n = s3_natural_module(&alg, &table).unwrap();
        assert_eq!(n.dim(), 2);
        // N is absolutely simple over F_2: End(N) is 1-dimensional.
        assert_eq!(modcat::hom_basis(&n, &n).unwrap().dim(), 1);
        // No trivial submodule or quotient.
        let one = modcat::unit_module(&alg);
        assert_eq!(modcat::hom_basis(&one, &n).unwrap().dim(), 0);
        assert_eq!(modcat::hom_basis(&n, &one).unwrap().dim(), 0);
    }

    #[test]
    fn group_algebra_antipode_squared_is_identity() {
        let s3 = build_group_algebra(&Field::prime(2).unwrap(), &GroupTable::symmetric3()).unwrap();
        let s = &s3.presentation().antipode;
        assert!(s.mul(s).unwrap().is_identity());
    }
}
