//! Cayley tables for the small-group catalog and name resolution, including
//! the `dual:` and `double:` prefixes.

use crate::error::{HopfError, Result};
use crate::hopf::{drinfeld_double, dual_hopf, group_algebra, Hopf};

/// A Cayley table with element labels; `table[i][j]` is the product index.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn cyclic(n: usize) -> GroupTable {
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            k => format!("g{k}"),
        })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable {
        name: format!("C{n}"),
        labels,
        table,
    }
}

fn klein_four() -> GroupTable {
    // elements as pairs in Z2 x Z2: e, a, b, ab
    let enc = |x: usize, y: usize| x * 2 + y;
    let table = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| enc((i / 2 + j / 2) % 2, (i % 2 + j % 2) % 2))
                .collect()
        })
        .collect();
    GroupTable {
        name: "V4".to_string(),
        labels: labels(&["e", "a", "b", "ab"]),
        table,
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a o b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn sym3() -> GroupTable {
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2], // e
        vec![1, 0, 2], // (12)
        vec![2, 1, 0], // (13)
        vec![0, 2, 1], // (23)
        vec![1, 2, 0], // (123): 1->2, 2->3, 3->1
        vec![2, 0, 1], // (132)
    ];
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap()
                })
                .collect()
        })
        .collect();
    GroupTable {
        name: "S3".to_string(),
        labels: labels(&["e", "(12)", "(13)", "(23)", "(123)", "(132)"]),
        table,
    }
}

fn dihedral4() -> GroupTable {
    // elements r^k s^b, index k + 4b; (k1,b1)(k2,b2) = r^{k1 + (-1)^{b1} k2} s^{b1+b2}
    let enc = |k: usize, b: usize| k + 4 * b;
    let mut table = vec![vec![0usize; 8]; 8];
    for k1 in 0..4 {
        for b1 in 0..2 {
            for k2 in 0..4 {
                for b2 in 0..2 {
                    let k = if b1 == 0 { (k1 + k2) % 4 } else { (k1 + 4 - k2) % 4 };
                    table[enc(k1, b1)][enc(k2, b2)] = enc(k, (b1 + b2) % 2);
                }
            }
        }
    }
    GroupTable {
        name: "D4".to_string(),
        labels: labels(&["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]),
        table,
    }
}

fn quaternion8() -> GroupTable {
    // index = 2*axis + sign, axis in {1,i,j,k}, sign 0 for +, 1 for -
    let lab = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    // unit quaternion products on axes 0=1,1=i,2=j,3=k with a sign
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) => (0, true),
            (2, 2) => (0, true),
            (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for a in 0..4 {
        for sa in 0..2 {
            for b in 0..4 {
                for sb in 0..2 {
                    let (c, neg) = unit_mul(a, b);
                    let sc = (sa + sb + neg as usize) % 2;
                    table[2 * a + sa][2 * b + sb] = 2 * c + sc;
                }
            }
        }
    }
    GroupTable {
        name: "Q8".to_string(),
        labels: labels(&lab),
        table,
    }
}

/// Look up one of the base groups by name.
pub fn group_table(name: &str) -> Result<GroupTable> {
    match name {
        "C2" => Ok(cyclic(2)),
        "C3" => Ok(cyclic(3)),
        "C4" => Ok(cyclic(4)),
        "C5" => Ok(cyclic(5)),
        "C6" => Ok(cyclic(6)),
        "C7" => Ok(cyclic(7)),
        "C8" => Ok(cyclic(8)),
        "V4" => Ok(klein_four()),
        "S3" => Ok(sym3()),
        "D4" => Ok(dihedral4()),
        "Q8" => Ok(quaternion8()),
        _ => Err(HopfError::UnknownCatalog(name.to_string())),
    }
}

/// Names accepted by [`catalog_hopf`], without the `dual:`/`double:` prefixes.
pub fn base_names() -> Vec<&'static str> {
    vec![
        "C2", "C3", "C4", "C5", "C6", "C7", "C8", "V4", "S3", "D4", "Q8",
    ]
}

/// Build a catalog algebra by name. Accepts `dual:<name>` and `double:<name>`
/// recursively.
pub fn catalog_hopf(name: &str) -> Result<Hopf> {
    if let Some(rest) = name.strip_prefix("dual:") {
        let h = catalog_hopf(rest)?;
        return dual_hopf(&h);
    }
    if let Some(rest) = name.strip_prefix("double:") {
        let h = catalog_hopf(rest)?;
        return drinfeld_double(&h);
    }
    let g = group_table(name)?;
    group_algebra(&g.table, &g.labels)
}

/// All subgroups of a group given by its Cayley table, each as a sorted list
/// of element indices. Ordered by (size, lexicographic).
pub fn subgroups(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j))
        .expect("table has an identity");
    let mut found: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << e) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| mask & (1 << table[a][b]) != 0));
        if closed {
            found.push(members);
        }
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found
}

/// Whether `members` (a subgroup) is normal in the group.
pub fn is_normal_subgroup(table: &[Vec<usize>], members: &[usize]) -> bool {
    let n = table.len();
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j))
        .expect("table has an identity");
    let inv = |g: usize| (0..n).find(|&x| table[g][x] == e).unwrap();
    for &g in (0..n).collect::<Vec<_>>().iter() {
        let gi = inv(g);
        for &h in members {
            let c = table[table[g][h]][gi];
            if !members.contains(&c) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_groups_are_valid_hopf_algebras() {
        for name in base_names() {
            let h = catalog_hopf(name).unwrap();
            assert!(h.verify_axioms().all_passed(), "axioms fail for {name}");
        }
    }

    #[test]
    fn exponents() {
        assert_eq!(catalog_hopf("C6").unwrap().conductor(), 6);
        assert_eq!(catalog_hopf("V4").unwrap().conductor(), 2);
        assert_eq!(catalog_hopf("S3").unwrap().conductor(), 6);
        assert_eq!(catalog_hopf("D4").unwrap().conductor(), 4);
        assert_eq!(catalog_hopf("Q8").unwrap().conductor(), 4);
    }

    #[test]
    fn s3_is_noncommutative_and_cocommutative() {
        let h = catalog_hopf("S3").unwrap();
        assert!(!h.is_commutative());
        assert!(h.is_cocommutative());
        let d = catalog_hopf("dual:S3").unwrap();
        assert!(d.is_commutative());
        assert!(!d.is_cocommutative());
    }

    #[test]
    fn q8_table_relations() {
        let g = quaternion8();
        let pos = |s: &str| g.labels.iter().position(|l| l == s).unwrap();
        let (i, j, k, m1) = (pos("i"), pos("j"), pos("k"), pos("-1"));
        assert_eq!(g.table[i][j], k);
        assert_eq!(g.table[j][i], pos("-k"));
        assert_eq!(g.table[i][i], m1);
        assert_eq!(g.table[k][k], m1);
    }

    #[test]
    fn s3_subgroup_lattice() {
        let g = sym3();
        let subs = subgroups(&g.table);
        assert_eq!(subs.len(), 6);
        let sizes: Vec<usize> = subs.iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        let a3: Vec<usize> = subs.iter().find(|s| s.len() == 3).unwrap().clone();
        assert!(is_normal_subgroup(&g.table, &a3));
        let c2 = subs.iter().find(|s| s.len() == 2).unwrap().clone();
        assert!(!is_normal_subgroup(&g.table, &c2));
    }

    #[test]
    fn rejects_non_group_table() {
        // 2x2 table without inverses/associativity structure
        let bad = vec![vec![0, 1], vec![1, 1]];
        let labels: Vec<String> = vec!["e".into(), "x".into()];
        assert!(crate::hopf::group_algebra(&bad, &labels).is_err());
    }

    #[test]
    fn unknown_name_is_typed() {
        match catalog_hopf("M11") {
            Err(HopfError::UnknownCatalog(n)) => assert_eq!(n, "M11"),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn double_of_c2_is_a_hopf_algebra_of_dim_4() {
        let d = catalog_hopf("double:C2").unwrap();
        assert_eq!(d.dim(), 4);
        assert!(d.verify_axioms().all_passed());
    }

    #[test]
    fn double_of_s3_builds() {
        let d = catalog_hopf("double:S3").unwrap();
        assert_eq!(d.dim(), 36);
        assert!(!d.is_commutative());
        assert!(!d.is_cocommutative());
    }
}
