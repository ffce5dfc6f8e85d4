use std::collections::BTreeMap;

use super::G2Error;
use crate::exec::Exec;

/// A root `m alpha + n beta`; `alpha` short, `beta` long.
pub type Root = [i64; 2];

pub const POSITIVE_ROOTS: [Root; 6] = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];

/// Pairs of positive roots whose sum is a root, in the order their signs are searched.
pub const POSITIVE_PAIRS: [(Root, Root); 5] = [([1, 0], [0, 1]), ([1, 0], [1, 1]), ([1, 0], [2, 1]), ([0, 1], [3, 1]), ([1, 1], [2, 1])];

/// Twice the invariant form: `(alpha,alpha) = 2, (beta,beta) = 6, (alpha,beta) = -3`.
pub fn inner(r: Root, s: Root) -> i64 {
    2 * r[0] * s[0] - 3 * (r[0] * s[1] + r[1] * s[0]) + 6 * r[1] * s[1]
}

/// `<r, s^vee> = 2 (r,s) / (s,s)`.
pub fn pairing(r: Root, s: Root) -> i64 {
    2 * inner(r, s) / inner(s, s)
}

fn add(r: Root, s: Root) -> Root {
    [r[0] + s[0], r[1] + s[1]]
}

fn neg(r: Root) -> Root {
    [-r[0], -r[1]]
}

pub fn root_name(r: Root) -> String {
    let term = |c: i64, s: &str| match c {
        0 => String::new(),
        1 => s.to_string(),
        -1 => format!("-{s}"),
        c => format!("{c}{s}"),
    };
    let (a, b) = (term(r[0], "a"), term(r[1], "b"));
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ if r[1] < 0 => format!("{a}{b}"),
        _ => format!("{a}+{b}"),
    }
}

/// Basis `x_r` for the 12 roots (positive first) then `h_alpha, h_beta`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub roots: Vec<Root>,
    /// `N_{r,s}` for roots with `r + s` a root.
    pub n: BTreeMap<(Root, Root), i64>,
    /// `table[i][j]` = sparse `[e_i, e_j]` as (index, coefficient).
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

pub const DIM: usize = 14;
pub const H_ALPHA: usize = 12;
pub const H_BETA: usize = 13;

/// Reflection closure of the simple roots.
pub fn root_system() -> Vec<Root> {
    let simple = [[1, 0], [0, 1]];
    let mut roots: Vec<Root> = simple.to_vec();
    let mut k = 0;
    while k < roots.len() {
        let r = roots[k];
        for s in simple {
            let c = pairing(r, s);
            let img = [r[0] - c * s[0], r[1] - c * s[1]];
            if !roots.contains(&img) {
                roots.push(img);
            }
        }
        k += 1;
    }
    let mut pos: Vec<Root> = POSITIVE_ROOTS.to_vec();
    pos.retain(|r| roots.contains(r));
    let negs: Vec<Root> = pos.iter().map(|&r| neg(r)).collect();
    assert_eq!(roots.len(), 12, "reflection closure");
    pos.into_iter().chain(negs).collect()
}

impl ChevalleyAlgebra {
    pub fn index_of(&self, r: Root) -> Option<usize> {
        self.roots.iter().position(|&s| s == r)
    }

    fn is_root(&self, r: Root) -> bool {
        self.roots.contains(&r)
    }

    /// Largest `p` with `s - p r` a root.
    fn string_p(&self, r: Root, s: Root) -> i64 {
        let mut p = 0;
        while self.is_root([s[0] - (p + 1) * r[0], s[1] - (p + 1) * r[1]]) {
            p += 1;
        }
        p
    }

    /// Coroot `r^vee` in the basis `h_alpha, h_beta`.
    pub fn coroot(r: Root) -> [i64; 2] {
        let rr = inner(r, r);
        [r[0] * 2 / rr, r[1] * 6 / rr]
    }

    /// Bracket of basis elements as a dense integer vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> [i64; DIM] {
        let mut out = [0i64; DIM];
        for &(k, c) in &self.table[i][j] {
            out[k] += c;
        }
        out
    }

    pub fn bracket(&self, u: &[i64; DIM], v: &[i64; DIM]) -> [i64; DIM] {
        let mut out = [0i64; DIM];
        for i in 0..DIM {
            if u[i] == 0 {
                continue;
            }
            for j in 0..DIM {
                if v[j] == 0 {
                    continue;
                }
                for &(k, c) in &self.table[i][j] {
                    out[k] += u[i] * v[j] * c;
                }
            }
        }
        out
    }

    /// `ad(e_i)` as a 14x14 integer matrix, column `j` = `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> [[i64; DIM]; DIM] {
        let mut m = [[0i64; DIM]; DIM];
        for j in 0..DIM {
            for &(k, c) in &self.table[i][j] {
                m[k][j] += c;
            }
        }
        m
    }

    /// First failing triple, if any, of the Jacobi identity on basis elements.
    pub fn jacobi_violation(&self, exec: Exec) -> Option<(usize, usize, usize)> {
        let unit = |i: usize| {
            let mut v = [0i64; DIM];
            v[i] = 1;
            v
        };
        let bad = exec.filter_map_range(DIM * DIM * DIM, |t| {
            let (i, j, k) = (t / (DIM * DIM), (t / DIM) % DIM, t % DIM);
            let (a, b, c) = (unit(i), unit(j), unit(k));
            let s1 = self.bracket(&self.bracket(&a, &b), &c);
            let s2 = self.bracket(&self.bracket(&b, &c), &a);
            let s3 = self.bracket(&self.bracket(&c, &a), &b);
            (0..DIM).any(|x| s1[x] + s2[x] + s3[x] != 0).then_some((i, j, k))
        });
        bad.into_iter().next()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| {
            let a = self.bracket_basis(i, j);
            let b = self.bracket_basis(j, i);
            (0..DIM).all(|k| a[k] == -b[k])
        }))
    }

    fn from_signs(roots: Vec<Root>, signs: [i64; 5]) -> Result<Self, G2Error> {
        let mut alg = ChevalleyAlgebra { roots, n: BTreeMap::new(), table: Vec::new() };
        for (k, &(r, s)) in POSITIVE_PAIRS.iter().enumerate() {
            let v = signs[k] * (alg.string_p(r, s) + 1);
            alg.n.insert((r, s), v);
            alg.n.insert((s, r), -v);
        }
        // close under N_{-r,-s} = -N_{r,s} and N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)
        let roots = alg.roots.clone();
        loop {
            let before = alg.n.len();
            let known: Vec<((Root, Root), i64)> = alg.n.iter().map(|(k, v)| (*k, *v)).collect();
            for ((r, s), v) in known {
                alg.n.entry((neg(r), neg(s))).or_insert(-v);
                alg.n.entry((neg(s), neg(r))).or_insert(v);
                let t = neg(add(r, s));
                let (rr, ss, tt) = (inner(r, r), inner(s, s), inner(t, t));
                let n_st = v * rr / tt;
                let n_tr = v * ss / tt;
                alg.n.entry((s, t)).or_insert(n_st);
                alg.n.entry((t, s)).or_insert(-n_st);
                alg.n.entry((t, r)).or_insert(n_tr);
                alg.n.entry((r, t)).or_insert(-n_tr);
            }
            if alg.n.len() == before {
                break;
            }
        }
        for &r in &roots {
            for &s in &roots {
                if !alg.is_root(add(r, s)) {
                    continue;
                }
                let Some(&v) = alg.n.get(&(r, s)) else {
                    return Err(G2Error::Structural(format!("N({},{}) undetermined", root_name(r), root_name(s))));
                };
                if v.abs() != alg.string_p(r, s) + 1 {
                    return Err(G2Error::Structural(format!("|N({},{})| = {} is not p+1", root_name(r), root_name(s), v.abs())));
                }
            }
        }
        alg.fill_table();
        Ok(alg)
    }

    fn fill_table(&mut self) {
        let mut table = vec![vec![Vec::new(); DIM]; DIM];
        let hs = [[1, 0], [0, 1]];
        for (i, &r) in self.roots.iter().enumerate() {
            for (j, &s) in self.roots.iter().enumerate() {
                let sum = add(r, s);
                if sum == [0, 0] {
                    let c = Self::coroot(r);
                    for (k, &ck) in c.iter().enumerate() {
                        if ck != 0 {
                            table[i][j].push((H_ALPHA + k, ck));
                        }
                    }
                } else if let Some(k) = self.index_of(sum) {
                    table[i][j].push((k, self.n[&(r, s)]));
                }
            }
            for (k, &h) in hs.iter().enumerate() {
                let c = pairing(r, h);
                if c != 0 {
                    table[H_ALPHA + k][i].push((i, c));
                    table[i][H_ALPHA + k].push((i, -c));
                }
            }
        }
        self.table = table;
    }
}

/// Tries the 32 sign patterns on the positive pairs, all `+` first, and
/// returns the first whose structure constants satisfy Jacobi over the integers.
pub fn build_chevalley_algebra(exec: Exec) -> Result<ChevalleyAlgebra, G2Error> {
    let roots = root_system();
    for mask in 0..32u32 {
        let mut signs = [1i64; 5];
        for (k, s) in signs.iter_mut().enumerate() {
            if mask >> k & 1 == 1 {
                *s = -1;
            }
        }
        let Ok(alg) = ChevalleyAlgebra::from_signs(roots.clone(), signs) else { continue };
        if alg.is_antisymmetric() && alg.jacobi_violation(exec).is_none() {
            return Ok(alg);
        }
    }
    Err(G2Error::Structural("no sign choice satisfies the Jacobi identity".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_roots_and_cartan_pairings() {
        let roots = root_system();
        assert_eq!(roots.len(), 12);
        assert_eq!(pairing([1, 0], [0, 1]), -1);
        assert_eq!(pairing([0, 1], [1, 0]), -3);
        assert_eq!(ChevalleyAlgebra::coroot([1, 1]), [1, 3]);
        assert_eq!(ChevalleyAlgebra::coroot([3, 2]), [1, 2]);
    }

    #[test]
    fn root_names() {
        assert_eq!(root_name([3, 2]), "3a+2b");
        assert_eq!(root_name([-1, 0]), "-a");
        assert_eq!(root_name([0, 1]), "b");
    }
}
