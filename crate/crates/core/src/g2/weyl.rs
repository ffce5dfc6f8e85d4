use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use super::weights::WeightTable;
use super::G2Error;
use crate::arith::IntMatrix;
use crate::cert::Certificate;
use crate::exec::Exec;
use crate::geom::MonomialAction;
use crate::mpoly::{solve_integer, MultiPoly, PolyRing, Ring};

/// A monomial symmetry `X_i -> X_{sigma(i)}` of the seven coordinates that
/// is linear on weights: `A w_i = w_{sigma(i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    /// `sigma[i - 1] = sigma(i)`.
    pub sigma: [usize; 7],
    pub matrix: [[i64; 2]; 2],
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { sigma: [1, 2, 3, 4, 5, 6, 7], matrix: [[1, 0], [0, 1]] }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    /// `self . other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut sigma = [0; 7];
        for (i, s) in sigma.iter_mut().enumerate() {
            *s = self.apply(other.sigma[i]);
        }
        WeylElement { sigma, matrix: mat_mul(&self.matrix, &other.matrix) }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut sigma = [0; 7];
        for i in 1..=7 {
            sigma[self.apply(i) - 1] = i;
        }
        let [[a, b], [c, d]] = self.matrix;
        let det = a * d - b * c;
        WeylElement { sigma, matrix: [[d * det, -b * det], [-c * det, a * det]] }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    /// Cycle notation on `1..7`, e.g. `(17)(26)(35)`.
    pub fn cycles(&self) -> String {
        cycle_notation(&self.sigma.map(|s| s - 1))
    }

    /// The substitution on a ring whose variables are `X1..X7`.
    pub fn as_action(&self, ring: &Ring) -> MonomialAction {
        let perm = self.sigma.iter().map(|s| s - 1).collect();
        MonomialAction::permutation(&self.cycles(), ring, perm).expect("permutation")
    }

    /// The substitution on the chart ring `x1, x2, x3, x5, x6, x7`.
    pub fn chart_action(&self, ring: &Ring) -> MonomialAction {
        let idx = WeightTable::chart_indices();
        let pos = |i: usize| idx.iter().position(|&j| j == i).expect("sigma fixes 4");
        let perm = idx.iter().map(|&i| pos(self.apply(i))).collect();
        MonomialAction::permutation(&self.cycles(), ring, perm).expect("permutation")
    }
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn mat_vec(a: &[[i64; 2]; 2], v: [i64; 2]) -> [i64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

/// Cycle notation of a 0-based permutation, printed 1-based; `e` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// The `k`-th permutation of `items` in lexicographic order.
fn nth_permutation(items: &[usize], mut k: usize) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(items.len());
    let mut fact: usize = (1..pool.len()).product();
    while !pool.is_empty() {
        let i = k / fact.max(1);
        k %= fact.max(1);
        out.push(pool.remove(i));
        if !pool.is_empty() {
            fact /= pool.len();
        }
    }
    out
}

/// Brute-force search over the 720 permutations of `{1,2,3,5,6,7}`.
pub fn search_weyl_candidates(table: &WeightTable, exec: Exec) -> Vec<WeylElement> {
    let movable = [1usize, 2, 3, 5, 6, 7];
    exec.filter_map_range(720, |k| {
        let image = nth_permutation(&movable, k);
        let mut sigma = [0usize; 7];
        sigma[3] = 4;
        for (from, to) in movable.iter().zip(&image) {
            sigma[from - 1] = *to;
        }
        // w1 = e1 and w2 = e2, so the columns of A are w_sigma(1), w_sigma(2)
        let c1 = table.weight(sigma[0]);
        let c2 = table.weight(sigma[1]);
        let matrix = [[c1[0], c2[0]], [c1[1], c2[1]]];
        let el = WeylElement { sigma, matrix };
        let linear = (1..=7).all(|i| mat_vec(&matrix, table.weight(i)) == table.weight(el.apply(i)));
        (linear && el.det().abs() == 1).then_some(el)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &WeylElement) -> bool {
        self.elements.contains(g)
    }

    pub fn antipodal(&self) -> Option<&WeylElement> {
        self.elements.iter().find(|g| g.sigma == [7, 6, 5, 4, 3, 2, 1])
    }

    pub fn center(&self) -> Vec<WeylElement> {
        self.elements
            .iter()
            .filter(|g| self.elements.iter().all(|h| g.compose(h) == h.compose(g)))
            .copied()
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<_> = self.elements.iter().collect();
        self.elements.iter().all(|g| self.elements.iter().all(|h| set.contains(&g.compose(h)))) && set.contains(&WeylElement::identity())
    }

    /// Stabilizer of the triple `{X1, X5, X6}`.
    pub fn triple_stabilizer(&self) -> Vec<WeylElement> {
        let triple = [1usize, 5, 6];
        self.elements.iter().filter(|g| triple.iter().all(|&i| triple.contains(&g.apply(i)))).copied().collect()
    }
}

/// The three pairs `{1,7}, {2,6}, {3,5}`; returns which pair `i` lies in.
fn pair_of(i: usize) -> Option<usize> {
    match i {
        1 | 7 => Some(0),
        2 | 6 => Some(1),
        3 | 5 => Some(2),
        _ => None,
    }
}

pub fn quadric_poly(ring: &Ring) -> MultiPoly {
    MultiPoly::parse(ring, "X1*X7 + X2*X6 + X3*X5 + X4^2").expect("static polynomial")
}

/// Structural certificate of the synthesized group.
pub fn certify_weyl(group: &WeylGroup, table: &WeightTable) -> Certificate {
    let mut cert = Certificate::new("weyl group");
    let n = group.order();
    cert.require(n == 12, "order 12", format!("order {n}"));
    cert.require(group.is_closed(), "closed under composition", "not closed under composition");
    let linear = group.elements.iter().all(|g| (1..=7).all(|i| mat_vec(&g.matrix, table.weight(i)) == table.weight(g.apply(i))));
    cert.require(linear, "A w_i = w_sigma(i) for every element", "lattice matrix inconsistent");
    let pairs_ok = group.elements.iter().all(|g| {
        g.apply(4) == 4 && [(1, 7), (2, 6), (3, 5)].iter().all(|&(a, b)| pair_of(g.apply(a)) == pair_of(g.apply(b)))
    });
    cert.require(pairs_ok, "pairing {1,7},{2,6},{3,5} preserved and 4 fixed", "pairing not preserved");

    let ring = PolyRing::indexed("X", 7, crate::arith::FieldKind::Rational);
    let n_poly = quadric_poly(&ring);
    let invariant = group.elements.iter().all(|g| g.as_action(&ring).apply_poly(&n_poly).is_ok_and(|p| p == n_poly));
    cert.require(invariant, format!("{n_poly} invariant"), "quadric not invariant");

    match group.antipodal() {
        Some(a) => {
            cert.require(a.matrix == [[-1, 0], [0, -1]], "antipodal (17)(26)(35) has A = -I", "antipodal matrix is not -I");
            cert.require(a.compose(a).is_identity(), "antipodal squares to e", "antipodal has order > 2");
            let central = group.center().contains(a);
            cert.require(central, "antipodal is central", "antipodal not central");
        }
        None => cert.fail("antipodal (17)(26)(35) missing"),
    }
    cert.require(!group.is_abelian(), "nonabelian", "abelian");
    let z = group.center().len();
    cert.require(z == 2, "center of order 2", format!("center of order {z}"));
    let rot = group.elements.iter().find(|g| g.order() == 6);
    match rot {
        Some(r) => {
            let flips = group.elements.iter().any(|s| s.order() == 2 && s.compose(r).compose(s) == r.inverse());
            cert.require(flips, format!("dihedral: rotation {} inverted by a reflection", r.cycles()), "no reflection inverts the rotation");
        }
        None => cert.fail("no element of order 6"),
    }
    let stab = group.triple_stabilizer();
    let induced: BTreeSet<[usize; 3]> = stab
        .iter()
        .map(|g| {
            let mut p = [0; 3];
            for (k, &(a, _)) in [(1, 7), (2, 6), (3, 5)].iter().enumerate() {
                p[k] = pair_of(g.apply(a)).expect("pair");
            }
            p
        })
        .collect();
    cert.require(
        stab.len() == 6 && induced.len() == 6,
        "stabilizer of {X1,X5,X6} has order 6 and is all of S3 on the pairs",
        format!("triple stabilizer order {}, induced {} pair permutations", stab.len(), induced.len()),
    );
    cert
}

pub fn synthesize_weyl_group(table: &WeightTable, exec: Exec) -> Result<WeylGroup, G2Error> {
    let mut elements = search_weyl_candidates(table, exec);
    elements.sort();
    let group = WeylGroup { elements };
    let cert = certify_weyl(&group, table);
    if !cert.passed {
        return Err(G2Error::Structural(cert.failure.unwrap_or_default()));
    }
    Ok(group)
}

/// Exponents over `X1..X7` of `y1, y2, y3, z1, z2`.
pub const INVARIANT_EXPONENTS: [[i64; 7]; 5] = [
    [1, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 1, 0, 0, 0, 1],
];

/// Permutation `y_k -> y_{perm[k]}` of `(y1, y2, y3, z1, z2)`.
pub type ModelPerm = [usize; 5];

/// Image of each invariant monomial under `X_i -> X_{sigma(i)}`.
pub fn induced_action_on_model(g: &WeylElement) -> Result<ModelPerm, G2Error> {
    let mut perm = [0usize; 5];
    for (k, e) in INVARIANT_EXPONENTS.iter().enumerate() {
        let mut img = [0i64; 7];
        for i in 1..=7 {
            img[g.apply(i) - 1] += e[i - 1];
        }
        match INVARIANT_EXPONENTS.iter().position(|f| *f == img) {
            Some(j) => perm[k] = j,
            None => {
                let a = IntMatrix::from_cols(&INVARIANT_EXPONENTS.iter().map(|v| v.to_vec()).collect::<Vec<_>>());
                let t: Vec<BigInt> = img.iter().map(|&x| BigInt::from(x)).collect();
                let why = match solve_integer(&a, &t) {
                    Some(c) => format!("image of invariant {} is the product with exponents {:?}, not a generator", k + 1, c),
                    None => format!("image of invariant {} is not a monomial in the invariants", k + 1),
                };
                return Err(G2Error::LatticeSolve(why));
            }
        }
    }
    Ok(perm)
}

/// `s3:<cycles on y>,s2:<-|(12)>`.
pub fn model_perm_name(p: &ModelPerm) -> String {
    let y = cycle_notation(&p[..3]);
    let z = if p[3] == 4 { "(12)" } else { "-" };
    format!("s3:{y},s2:{z}")
}

pub fn compose_model(a: &ModelPerm, b: &ModelPerm) -> ModelPerm {
    let mut out = [0; 5];
    for k in 0..5 {
        out[k] = a[b[k]];
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match induced_action_on_model(self) {
            Ok(p) => write!(f, "{}", model_perm_name(&p)),
            Err(_) => write!(f, "{}", self.cycles()),
        }
    }
}

/// Certifies the induced action is an injective homomorphism onto `S3 x S2`.
pub fn certify_induced_action(group: &WeylGroup) -> Result<Certificate, G2Error> {
    let mut cert = Certificate::new("induced action on (y;z)");
    let mut images = Vec::with_capacity(group.order());
    for g in &group.elements {
        images.push(induced_action_on_model(g)?);
    }
    let hom = group.elements.iter().zip(&images).all(|(g, pg)| {
        group.elements.iter().zip(&images).all(|(h, ph)| induced_action_on_model(&g.compose(h)).is_ok_and(|p| p == compose_model(pg, ph)))
    });
    cert.require(hom, "pi(gh) = pi(g) pi(h) for all pairs", "not a homomorphism");
    let distinct: BTreeSet<_> = images.iter().collect();
    cert.require(distinct.len() == 12, "image has order 12", format!("image has order {}", distinct.len()));
    let preserves_blocks = images.iter().all(|p| p[..3].iter().all(|&j| j < 3) && p[3..].iter().all(|&j| j >= 3));
    cert.require(preserves_blocks, "y's map to y's and z's to z's", "mixes y and z");
    let kernel: Vec<&ModelPerm> = images.iter().filter(|p| p[3] == 3).collect();
    let ys: BTreeSet<[usize; 3]> = kernel.iter().map(|p| [p[0], p[1], p[2]]).collect();
    cert.require(
        kernel.len() == 6 && ys.len() == 6,
        "z-swap kernel is S3 on y1,y2,y3 fixing z1,z2",
        format!("z-swap kernel has {} elements acting as {} permutations", kernel.len(), ys.len()),
    );
    let y_trivial: Vec<&ModelPerm> = images.iter().filter(|p| p[..3] == [0, 1, 2]).collect();
    cert.require(
        y_trivial.len() == 2 && y_trivial.iter().any(|p| p[3] == 4),
        "elements fixing the y's form S2 swapping z1,z2",
        "y-fixing subgroup is not S2",
    );
    if let Some(a) = group.antipodal() {
        let p = induced_action_on_model(a)?;
        cert.require(p == [0, 1, 2, 4, 3], "antipodal fixes y's and swaps z1,z2", format!("antipodal acts as {}", model_perm_name(&p)));
    }
    let names: Vec<String> = images.iter().map(model_perm_name).collect();
    cert.record(format!("elements: {}", names.join(" ")));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::build_weight_table;

    #[test]
    fn permutation_enumeration_is_complete() {
        let items = [1usize, 2, 3];
        let all: BTreeSet<Vec<usize>> = (0..6).map(|k| nth_permutation(&items, k)).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(nth_permutation(&items, 0), vec![1, 2, 3]);
        assert_eq!(nth_permutation(&items, 5), vec![3, 2, 1]);
    }

    #[test]
    fn sequential_and_parallel_search_agree() {
        let t = build_weight_table();
        assert_eq!(search_weyl_candidates(&t, Exec::Sequential), search_weyl_candidates(&t, Exec::Parallel));
    }

    #[test]
    fn cycle_names() {
        assert_eq!(cycle_notation(&[6, 5, 4, 3, 2, 1, 0]), "(17)(26)(35)");
        assert_eq!(model_perm_name(&[1, 0, 2, 3, 4]), "s3:(12),s2:-");
        assert_eq!(model_perm_name(&[0, 1, 2, 4, 3]), "s3:e,s2:(12)");
    }
}
