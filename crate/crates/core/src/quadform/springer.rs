use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadError, QuadraticForm};
use crate::arith::{BigInt, BigRational, FieldKind, Scalar, UniPoly};
use crate::cert::Certificate;
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentBranch {
    /// The point was already rational.
    Rational,
    /// The top-degree coefficient vector is isotropic.
    TopVector,
    /// `q(P(x)) = f(x) g(x)` with `g` linear; evaluate at the root of `g`.
    Cofactor,
    /// `q(P(x))` vanishes identically.
    Identically,
}

impl fmt::Display for DescentBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DescentBranch::Rational => "rational input",
            DescentBranch::TopVector => "(i) top-degree vector",
            DescentBranch::Cofactor => "(ii) root of the cofactor",
            DescentBranch::Identically => "(iii) q(P(x)) = 0",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct DescentOutcome {
    /// Primitive integer vector, first nonzero entry positive.
    pub point: Vec<Scalar>,
    pub branch: DescentBranch,
    pub certificate: Certificate,
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn normalize_point(v: &[Scalar]) -> Result<Vec<Scalar>, QuadError> {
    let qs: Vec<BigRational> = v.iter().map(|s| s.as_rational().cloned().ok_or(QuadError::Characteristic(s.field().characteristic()))).collect::<Result<_, _>>()?;
    let first = qs.iter().find(|q| !q.is_zero()).ok_or(QuadError::ZeroVector)?;
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if first.is_negative() { -g } else { g };
    Ok(ints.iter().map(|x| Scalar::Rational(BigRational::from_integer(x / &g))).collect())
}

fn show(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn certify(q: &QuadraticForm, point: Vec<Scalar>, branch: DescentBranch, mut cert: Certificate) -> Result<DescentOutcome, QuadError> {
    let point = normalize_point(&point)?;
    let value = q.eval(&point)?;
    if !value.is_zero() {
        return Err(QuadError::Certification(format!("q{} = {value}", show(&point))));
    }
    cert.record(format!("branch {branch}"));
    cert.record(format!("q{} = 0 over QQ", show(&point)));
    Ok(DescentOutcome { point, branch, certificate: cert })
}

/// Descends a point of `q` over `K = QQ[x]/(f)` with `deg f` odd and at
/// most 3 to a rational point.
pub fn springer_descend(q: &QuadraticForm, point: &[Scalar]) -> Result<DescentOutcome, QuadError> {
    if q.field() != &FieldKind::Rational {
        return Err(QuadError::Characteristic(q.field().characteristic()));
    }
    if point.len() != q.dim() {
        return Err(QuadError::DimensionMismatch { expected: q.dim(), got: point.len() });
    }
    if point.iter().all(Scalar::is_zero) {
        return Err(QuadError::ZeroVector);
    }
    let value = q.eval(point)?;
    if !value.is_zero() {
        return Err(QuadError::NotOnQuadric(value.to_string()));
    }
    let k = point[0].field();
    let mut cert = Certificate::new("Springer descent");
    let f = match &k {
        FieldKind::Rational => return certify(q, point.to_vec(), DescentBranch::Rational, cert),
        FieldKind::Extension(e) if e.base() == &FieldKind::Rational => e.modulus(),
        other => return Err(QuadError::Characteristic(other.characteristic())),
    };
    let d = f.degree().unwrap_or(0);
    if d % 2 == 0 || d > 3 {
        return Err(QuadError::UnsupportedDegree(d));
    }
    cert.record(format!("K = QQ[x]/({f}), degree {d}"));

    let mut polys: Vec<UniPoly> = point.iter().map(|s| s.as_ext().expect("point over K").to_poly()).collect();
    let g = polys.iter().fold(UniPoly::zero(FieldKind::Rational), |acc, p| acc.gcd(p));
    if g.degree().unwrap_or(0) > 0 {
        cert.record(format!("removed common factor {g}"));
        polys = polys.iter().map(|p| p.div_rem(&g).map(|(q, _)| q)).collect::<Result<_, _>>()?;
    }
    let qp = q.eval_univariate(&polys)?;
    let eval_at = |x0: &Scalar| polys.iter().map(|p| p.eval(x0)).collect::<Vec<_>>();

    if qp.is_zero() {
        let x0 = (0i64..)
            .flat_map(|n| [n, -n])
            .map(Scalar::from)
            .find(|x| eval_at(x).iter().any(|c| !c.is_zero()))
            .expect("a nonzero polynomial vector has a non-root");
        cert.record(format!("q(P(x)) = 0, evaluating at x = {x0}"));
        return certify(q, eval_at(&x0), DescentBranch::Identically, cert);
    }
    let m = polys.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
    let top: Vec<Scalar> = polys.iter().map(|p| p.coeff(m)).collect();
    if q.eval(&top)?.is_zero() {
        return certify(q, top, DescentBranch::TopVector, cert);
    }
    let (cof, rem) = qp.div_rem(&f)?;
    if !rem.is_zero() {
        return Err(QuadError::Certification(format!("{f} does not divide q(P(x)) = {qp}")));
    }
    cert.record(format!("q(P(x)) = ({f}) * ({cof})"));
    if cof.degree() != Some(1) {
        return Err(QuadError::UnsupportedDegree(cof.degree().unwrap_or(0)));
    }
    let x0 = -&cof.coeff(0).checked_div(&cof.coeff(1))?;
    cert.record(format!("cofactor root x = {x0}"));
    certify(q, eval_at(&x0), DescentBranch::Cofactor, cert)
}

/// A cubic point on a diagonal form that forces the cofactor branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedInstance {
    pub diagonal: Vec<i64>,
    /// `x^3 + c2 x^2 + c1 x + c0` as `[c0, c1, c2, 1]`.
    pub cubic: Vec<i64>,
    /// Coordinates as `[p0, p1, p2]` for `p0 + p1 x + p2 x^2`.
    pub coords: Vec<[i64; 3]>,
}

impl PlantedInstance {
    pub fn form(&self) -> QuadraticForm {
        QuadraticForm::diagonal(&FieldKind::Rational, &self.diagonal)
    }

    pub fn point(&self) -> Result<Vec<Scalar>, QuadError> {
        let f = UniPoly::from_i64(FieldKind::Rational, &self.cubic);
        let k = FieldKind::Extension(crate::arith::ExtField::new(&f, "t")?);
        let t = k.generator().expect("generator");
        Ok(self.coords.iter().map(|c| &(&k.from_i64(c[0]) + &(&k.from_i64(c[1]) * &t)) + &(&k.from_i64(c[2]) * &(&t * &t))).collect())
    }
}

/// The instance used by the suite: `<1,1,-1,-1,5>` over `QQ(2^(1/3))`.
pub fn branch_two_instance() -> PlantedInstance {
    PlantedInstance {
        diagonal: vec![1, 1, -1, -1, 5],
        cubic: vec![-2, 0, 0, 1],
        coords: vec![[-1, -1, -1], [0, 1, -1], [-1, -1, 0], [-1, -1, -1], [-1, 0, 0]],
    }
}

/// `p^2 mod x^3 + c2 x^2 + c1 x + c0` for `deg p <= 2`.
fn square_mod(p: [i64; 3], f: [i64; 3]) -> [i64; 3] {
    let mut s = [0i64; 5];
    for i in 0..3 {
        for j in 0..3 {
            s[i + j] += p[i] * p[j];
        }
    }
    for k in (3..5).rev() {
        let c = s[k];
        s[k] = 0;
        for (i, fi) in f.iter().enumerate() {
            s[k - 3 + i] -= c * fi;
        }
    }
    [s[0], s[1], s[2]]
}

fn decode(mut k: usize, n: usize, lo: i64, width: usize) -> Vec<[i64; 3]> {
    (0..n)
        .map(|_| {
            let mut c = [0i64; 3];
            for x in &mut c {
                *x = (k % width) as i64 + lo;
                k /= width;
            }
            c
        })
        .collect()
}

/// First point, in a fixed enumeration order with coefficients in
/// `[-h, h]`, on the diagonal form over `QQ[x]/(f)` whose descent takes the
/// cofactor branch: `f | q(P(x))`, anisotropic top vector, and coordinates
/// without a common factor.
pub fn search_branch_two_instance(diagonal: &[i64], cubic: [i64; 4], h: i64, exec: Exec) -> Option<PlantedInstance> {
    let n = diagonal.len();
    let width = (2 * h + 1) as usize;
    let per = width.pow(3);
    let f = [cubic[0], cubic[1], cubic[2]];
    let squares: Vec<[i64; 3]> = (0..per).map(|k| square_mod(decode(k, 1, -h, width)[0], f)).collect();
    let check = |k: usize| -> Option<PlantedInstance> {
        let mut rem = [0i64; 3];
        let mut idx = k;
        for c in diagonal {
            let s = squares[idx % per];
            idx /= per;
            for t in 0..3 {
                rem[t] += c * s[t];
            }
        }
        if rem != [0, 0, 0] {
            return None;
        }
        let coords = decode(k, n, -h, width);
        let m = (0..3).rev().find(|&d| coords.iter().any(|c| c[d] != 0))?;
        let top: i64 = coords.iter().zip(diagonal).map(|(c, d)| d * c[m] * c[m]).sum();
        if top == 0 || m < 2 {
            return None;
        }
        let polys: Vec<UniPoly> = coords.iter().map(|c| UniPoly::from_i64(FieldKind::Rational, c)).collect();
        let g = polys.iter().fold(UniPoly::zero(FieldKind::Rational), |acc, p| acc.gcd(p));
        (g.degree() == Some(0)).then(|| PlantedInstance { diagonal: diagonal.to_vec(), cubic: cubic.to_vec(), coords })
    };
    // blocks over the first coordinate keep the result independent of scheduling
    let block = per.pow(n as u32 - 1);
    let found = exec.map_range(per, |b| (0..block).map(|r| b + per * r).find_map(check));
    found.into_iter().flatten().next()
}

/// Primitive integer zeros of `q` with entries in `[-h, h]`, first nonzero
/// entry positive, in lexicographic order.
pub fn isotropic_vectors(q: &QuadraticForm, h: i64, exec: Exec) -> Vec<Vec<i64>> {
    let n = q.dim();
    let width = (2 * h + 1) as usize;
    let coeffs: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = q.coeff(i, j).as_rational().expect("rational form");
                    assert!(c.is_integer(), "integral form");
                    i64::try_from(c.to_integer()).expect("small coefficient")
                })
                .collect()
        })
        .collect();
    let total = width.pow(n as u32);
    let mut out = exec.filter_map_range(total, |mut k| {
        let mut v = vec![0i64; n];
        for x in v.iter_mut().rev() {
            *x = (k % width) as i64 - h;
            k /= width;
        }
        let first = v.iter().find(|&&x| x != 0)?;
        if *first < 0 || v.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            return None;
        }
        let mut s = 0i64;
        for i in 0..n {
            for j in i..n {
                s += coeffs[i][j] * v[i] * v[j];
            }
        }
        (s == 0).then_some(v)
    });
    out.sort();
    out
}
