//! Irreducible representations of the lifted Galois group.
//!
//! One-dimensional characters factor through the abelian quotient. The
//! two-dimensional irreducibles come in explicit families of monomial 2x2
//! matrices over roots of unity, and are reproduced independently by generic
//! induction from characters of the abelian index-2 subgroup; the two routes
//! are compared character-by-character in the test suites.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;

use crate::cyclotomic::{CycSum, RootExp};
use crate::error::{Error, Result};
use crate::group::{
    case_c_smith, subgroup_n, CaseTag, FieldParams, GroupElement, NSubgroup,
};

/// Shape of a nonzero monomial 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatShape {
    Diag,
    Anti,
}

/// A 2x2 matrix that is either diag(z1, z2) or has (1,2)-entry z1 and
/// (2,1)-entry z2, with all named entries roots of unity. Every generator
/// image in every family has this shape, and the shape set is closed under
/// multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    pub shape: MatShape,
    pub z1: RootExp,
    pub z2: RootExp,
}

impl Mat2 {
    pub fn diag(z1: RootExp, z2: RootExp) -> Self {
        Mat2 {
            shape: MatShape::Diag,
            z1,
            z2,
        }
    }

    pub fn anti(z1: RootExp, z2: RootExp) -> Self {
        Mat2 {
            shape: MatShape::Anti,
            z1,
            z2,
        }
    }

    pub fn identity() -> Self {
        Mat2::diag(RootExp::one(), RootExp::one())
    }

    pub fn minus_identity() -> Self {
        Mat2::diag(RootExp::minus_one(), RootExp::minus_one())
    }

    pub fn scalar(z: RootExp) -> Self {
        Mat2::diag(z, z)
    }

    pub fn mul(self, other: Self) -> Self {
        use MatShape::*;
        match (self.shape, other.shape) {
            (Diag, Diag) => Mat2::diag(self.z1.mul(other.z1), self.z2.mul(other.z2)),
            (Diag, Anti) => Mat2::anti(self.z1.mul(other.z1), self.z2.mul(other.z2)),
            (Anti, Diag) => Mat2::anti(self.z1.mul(other.z2), self.z2.mul(other.z1)),
            (Anti, Anti) => Mat2::diag(self.z1.mul(other.z2), self.z2.mul(other.z1)),
        }
    }

    pub fn inv(self) -> Self {
        match self.shape {
            MatShape::Diag => Mat2::diag(self.z1.inv(), self.z2.inv()),
            MatShape::Anti => Mat2::anti(self.z2.inv(), self.z1.inv()),
        }
    }

    pub fn pow(self, e: i64) -> Self {
        let (mut base, mut e) = if e < 0 {
            (self.inv(), (-e) as u64)
        } else {
            (self, e as u64)
        };
        let mut acc = Mat2::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(self) -> CycSum {
        match self.shape {
            MatShape::Diag => {
                let mut s = CycSum::from_root(self.z1);
                s.add_term(self.z2, 1);
                s
            }
            MatShape::Anti => CycSum::zero(),
        }
    }

    pub fn det(self) -> RootExp {
        match self.shape {
            MatShape::Diag => self.z1.mul(self.z2),
            MatShape::Anti => self.z1.mul(self.z2).negate(),
        }
    }
}

impl serde::Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Mat2", 2)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("entries", &[self.z1, self.z2])?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Mat2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            shape: MatShape,
            entries: [RootExp; 2],
        }
        let raw = Raw::deserialize(d)?;
        Ok(Mat2 {
            shape: raw.shape,
            z1: raw.entries[0],
            z2: raw.entries[1],
        })
    }
}

/// Label of a two-dimensional family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A31,
    A32,
    A33,
    B31,
    B32,
    B33,
    B34,
    B35,
    C31,
    C32,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::A31 => "A3.1",
            Family::A32 => "A3.2",
            Family::A33 => "A3.3",
            Family::B31 => "B3.1",
            Family::B32 => "B3.2",
            Family::B33 => "B3.3",
            Family::B34 => "B3.4",
            Family::B35 => "B3.5",
            Family::C31 => "C3.1",
            Family::C32 => "C3.2",
        }
    }

    pub fn from_str_tag(s: &str) -> Option<Self> {
        Some(match s {
            "A3.1" => Family::A31,
            "A3.2" => Family::A32,
            "A3.3" => Family::A33,
            "B3.1" => Family::B31,
            "B3.2" => Family::B32,
            "B3.3" => Family::B33,
            "B3.4" => Family::B34,
            "B3.5" => Family::B35,
            "C3.1" => Family::C31,
            "C3.2" => Family::C32,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl serde::Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> serde::Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Family::from_str_tag(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown family tag {s}")))
    }
}

/// A character of the abelian quotient, inflated to the lifted group
/// (the sign element acts trivially).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneDimRep {
    /// One root of unity per generator, in generator order.
    pub values: Vec<RootExp>,
}

impl OneDimRep {
    pub fn value(&self, x: GroupElement) -> RootExp {
        let mut acc = RootExp::one();
        for (i, v) in self.values.iter().enumerate() {
            acc = acc.mul(v.pow(x.exps[i] as i64));
        }
        acc
    }
}

/// A member of one of the explicit two-dimensional families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDimRep {
    pub family: Family,
    pub i: u64,
    pub j: u64,
    /// Image of each generator, in generator order.
    pub images: Vec<Mat2>,
    pub eps_image: Mat2,
}

impl TwoDimRep {
    pub fn image(&self, x: GroupElement) -> Mat2 {
        rep_image(&self.images, self.eps_image, x)
    }
}

/// Image of a normal form under generator images (shared by the explicit
/// families and generically induced representations).
pub fn rep_image(images: &[Mat2], eps_image: Mat2, x: GroupElement) -> Mat2 {
    let mut acc = Mat2::identity();
    for (i, m) in images.iter().enumerate() {
        acc = acc.mul(m.pow(x.exps[i] as i64));
    }
    if x.eps == 1 {
        acc = acc.mul(eps_image);
    }
    acc
}

/// An irreducible representation of the lifted group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irrep {
    OneDim(OneDimRep),
    TwoDim(TwoDimRep),
}

impl Irrep {
    pub fn dim(&self) -> u64 {
        match self {
            Irrep::OneDim(_) => 1,
            Irrep::TwoDim(_) => 2,
        }
    }
}

/// Exact character value at a group element.
pub fn character(rep: &Irrep, x: GroupElement) -> CycSum {
    match rep {
        Irrep::OneDim(r) => CycSum::from_root(r.value(x)),
        Irrep::TwoDim(r) => r.image(x).trace(),
    }
}

/// All |G| one-dimensional representations, lexicographic in the exponent
/// tuple of the generator values.
pub fn enumerate_one_dim(params: &FieldParams) -> Vec<OneDimRep> {
    let orders: Vec<u64> = params
        .generators
        .iter()
        .map(|g| g.base_order as u64)
        .collect();
    let mut out = Vec::with_capacity(params.group_order() as usize);
    let mut exps = vec![0u64; orders.len()];
    loop {
        out.push(OneDimRep {
            values: exps
                .iter()
                .zip(&orders)
                .map(|(&c, &n)| RootExp::new(c as i64, n as i64))
                .collect(),
        });
        let mut i = exps.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            if i == 0 {
                return out;
            }
        }
    }
}

fn zeta(num: i64, den: i64) -> RootExp {
    RootExp::new(num, den)
}

/// The |G|/4 two-dimensional irreducibles for the params' case, in (i, j)
/// order within the single family the case admits.
pub fn enumerate_two_dim(params: &FieldParams) -> Result<Vec<TwoDimRep>> {
    let pv = params.p.value();
    let qv = params.q.value();
    let (pi, qi) = params.twist;
    let gen_count = params.generators.len();
    let eps_image = Mat2::minus_identity();
    let mut out = Vec::new();

    // assembles the image table given the p-role and q-role images and an
    // optional image for the extra commuting generator (p = 2 only)
    let build = |family: Family, i: u64, j: u64, img_p: Mat2, img_q: Mat2, img_extra: Option<Mat2>| {
        let mut images = vec![Mat2::identity(); gen_count];
        images[pi] = img_p;
        images[qi] = img_q;
        if let Some(m) = img_extra {
            images[0] = m;
        }
        TwoDimRep {
            family,
            i,
            j,
            images,
            eps_image,
        }
    };

    match params.case {
        CaseTag::A => {
            let q1 = (qv - 1) as u64;
            if pv == -1 {
                for j in 0..q1 / 2 {
                    let img_p = Mat2::diag(RootExp::one(), RootExp::minus_one());
                    let img_q = Mat2::anti(zeta(2 * j as i64, qv - 1), RootExp::one());
                    out.push(build(Family::A32, 0, j, img_p, img_q, None));
                }
            } else if pv == 2 {
                for i in 0..2u64 {
                    for j in 0..q1 / 2 {
                        let extra = Mat2::scalar(if i == 0 {
                            RootExp::one()
                        } else {
                            RootExp::minus_one()
                        });
                        let img_p = Mat2::diag(RootExp::one(), RootExp::minus_one());
                        let img_q = Mat2::anti(zeta(2 * j as i64, qv - 1), RootExp::one());
                        out.push(build(Family::A33, i, j, img_p, img_q, Some(extra)));
                    }
                }
            } else {
                for i in 0..((pv - 1) / 2) as u64 {
                    for j in 0..q1 / 2 {
                        let zp = zeta(i as i64, pv - 1);
                        let img_p = Mat2::diag(zp, zp.negate());
                        let img_q = Mat2::anti(zeta(2 * j as i64, qv - 1), RootExp::one());
                        out.push(build(Family::A31, i, j, img_p, img_q, None));
                    }
                }
            }
        }
        CaseTag::BQDoubles => {
            if (pv, qv) == (-1, 2) {
                let img_p = Mat2::diag(RootExp::one(), RootExp::minus_one());
                let img_q = Mat2::anti(RootExp::minus_one(), RootExp::one());
                out.push(build(Family::B32, 0, 0, img_p, img_q, None));
            } else if pv == -1 {
                for j in (1..(qv - 1) as u64).step_by(2) {
                    let img_p = Mat2::diag(RootExp::one(), RootExp::minus_one());
                    let img_q = Mat2::anti(zeta(j as i64, qv - 1), RootExp::one());
                    out.push(build(Family::B33, 0, j, img_p, img_q, None));
                }
            } else if pv == 2 {
                for i in 0..2u64 {
                    for j in (1..(qv - 1) as u64).step_by(2) {
                        let extra = Mat2::scalar(if i == 0 {
                            RootExp::one()
                        } else {
                            RootExp::minus_one()
                        });
                        let img_p = Mat2::diag(RootExp::one(), RootExp::minus_one());
                        let img_q = Mat2::anti(zeta(j as i64, qv - 1), RootExp::one());
                        out.push(build(Family::B34, i, j, img_p, img_q, Some(extra)));
                    }
                }
            } else {
                for i in 0..((pv - 1) / 2) as u64 {
                    for j in (1..(qv - 1) as u64).step_by(2) {
                        let zp = zeta(i as i64, pv - 1);
                        let img_p = Mat2::diag(zp, zp.negate());
                        let img_q = Mat2::anti(zeta(j as i64, qv - 1), RootExp::one());
                        out.push(build(Family::B31, i, j, img_p, img_q, None));
                    }
                }
            }
        }
        CaseTag::BPDoubles => {
            for i in (1..(pv - 1) as u64).step_by(2) {
                for j in 0..((qv - 1) / 2) as u64 {
                    let img_p = Mat2::anti(zeta(i as i64, pv - 1), RootExp::one());
                    let zq = zeta(j as i64, qv - 1);
                    let img_q = Mat2::diag(zq, zq.negate());
                    out.push(build(Family::B35, i, j, img_p, img_q, None));
                }
            }
        }
        CaseTag::CFirst | CaseTag::CSecond => {
            let smith = case_c_smith(params)?;
            let (family, m, n) = if smith.second_subcase {
                (Family::C32, qv - 1, pv - 1)
            } else {
                (Family::C31, pv - 1, qv - 1)
            };
            let (d, s, t, u, v) = (smith.d, smith.s, smith.t, smith.u, smith.v);
            for i in 0..d as u64 {
                for j in (1..(s * n) as u64).step_by(2) {
                    // squared role gets the antidiagonal image, linear role
                    // the diagonal one
                    let img_sq = Mat2::anti(
                        zeta(2 * s * u * i as i64 - j as i64, m),
                        RootExp::one(),
                    );
                    let z = zeta(2 * t * v * i as i64 + j as i64, 2 * n);
                    let img_lin = Mat2::diag(z, z.negate());
                    let (img_p, img_q) = if smith.second_subcase {
                        (img_lin, img_sq)
                    } else {
                        (img_sq, img_lin)
                    };
                    out.push(build(family, i, j, img_p, img_q, None));
                }
            }
        }
    }

    debug_assert_eq!(out.len() as u64, params.group_order() / 4);
    Ok(out)
}

/// Checks exactly that a representation satisfies the presentation: the
/// generator-order relations against the sign image, the anticommuting pair,
/// commutation of every other pair, and that the sign image squares to 1.
pub fn verify_homomorphism(params: &FieldParams, rep: &Irrep) -> bool {
    match rep {
        Irrep::OneDim(r) => {
            for (i, g) in params.generators.iter().enumerate() {
                // sign element acts trivially, so the relation needs value^order = 1
                if !r.values[i].pow(g.base_order as i64).is_one() {
                    return false;
                }
            }
            true
        }
        Irrep::TwoDim(r) => {
            let eps = r.eps_image;
            if eps.mul(eps) != Mat2::identity() {
                return false;
            }
            for (i, g) in params.generators.iter().enumerate() {
                let lhs = r.images[i].pow(g.base_order as i64);
                let rhs = eps.pow(g.delta as i64);
                if lhs != rhs {
                    return false;
                }
            }
            let (pi, qi) = params.twist;
            let mp = r.images[pi];
            let mq = r.images[qi];
            if mp.mul(mq) != mq.mul(mp).mul(eps) {
                return false;
            }
            for a in 0..r.images.len() {
                for b in a + 1..r.images.len() {
                    if (a, b) == (pi, qi) {
                        continue;
                    }
                    if r.images[a].mul(r.images[b]) != r.images[b].mul(r.images[a]) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Exact character table row over a fixed element list.
pub fn character_row(rep: &Irrep, elements: &[GroupElement]) -> Vec<CycSum> {
    elements.iter().map(|&x| character(rep, x)).collect()
}

/// (1/|G~|) sum over the group of chi1 conj(chi2), from exact values.
pub fn inner_product(row1: &[CycSum], row2: &[CycSum]) -> Complex64 {
    debug_assert_eq!(row1.len(), row2.len());
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, b) in row1.iter().zip(row2) {
        acc += a.eval() * b.eval().conj();
    }
    acc / row1.len() as f64
}

/// The abelian index-2 subgroup presented as an internal direct sum of
/// explicit cyclic subgroups, with a decomposition table for every element.
#[derive(Debug, Clone)]
pub struct NBasis {
    pub subgroup: NSubgroup,
    /// Independent cyclic generators with their orders.
    pub cyclic: Vec<(GroupElement, u64)>,
    decomp: HashMap<GroupElement, Vec<u64>>,
}

impl NBasis {
    /// Exponent tuple of x over the cyclic generators.
    pub fn decompose(&self, x: GroupElement) -> Result<&[u64]> {
        self.decomp
            .get(&x)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::Domain("element outside the index-2 subgroup".to_string()))
    }
}

/// Builds the direct-sum basis of N for the params' case and verifies the
/// product of the cyclic subgroups is direct by exhausting all tuples.
pub fn n_basis(params: &FieldParams) -> Result<NBasis> {
    let subgroup = subgroup_n(params);
    let (pi, qi) = params.twist;
    let sp = params.generator_element(pi);
    let sq = params.generator_element(qi);
    let sq2 = params.multiply(sq, sq);
    let sp2 = params.multiply(sp, sp);
    let is_p2 = params.p.value() == 2;
    let s_minus1 = params.generator_element(0);
    let q1 = (params.q.value() - 1) as u64;
    let p1 = (params.p.value() - 1) as u64; // meaningful for odd p only

    let cyclic: Vec<(GroupElement, u64)> = match params.case {
        CaseTag::A => {
            let mut v = Vec::new();
            if is_p2 {
                v.push((s_minus1, 2));
                v.push((sp, 2));
            } else if params.p.value() == -1 {
                v.push((sp, 2));
            } else {
                v.push((sp, p1));
            }
            v.push((sq2, q1 / 2));
            v.push((GroupElement::EPSILON, 2));
            v
        }
        CaseTag::BQDoubles => {
            if (params.p.value(), params.q.value()) == (-1, 2) {
                vec![(sp, 2), (sq2, 2)]
            } else if params.p.value() == -1 {
                vec![(sp, 2), (sq2, q1)]
            } else if is_p2 {
                vec![(s_minus1, 2), (sp, 2), (sq2, q1)]
            } else {
                vec![(sp, p1), (sq2, q1)]
            }
        }
        CaseTag::BPDoubles => vec![(sp2, p1), (sq, q1)],
        CaseTag::CFirst | CaseTag::CSecond => {
            let smith = case_c_smith(params)?;
            vec![(smith.tau, smith.d as u64), (smith.mu, smith.mu_order())]
        }
    };

    // exhaust all exponent tuples; bijectivity certifies the direct sum
    let mut decomp: HashMap<GroupElement, Vec<u64>> = HashMap::new();
    let orders: Vec<u64> = cyclic.iter().map(|&(_, o)| o).collect();
    let mut tuple = vec![0u64; cyclic.len()];
    loop {
        let mut x = GroupElement::IDENTITY;
        for (k, &(g, _)) in cyclic.iter().enumerate() {
            x = params.multiply(x, params.pow(g, tuple[k] as i64));
        }
        if decomp.insert(x, tuple.clone()).is_some() {
            return Err(Error::Inconsistency(
                "cyclic factors of N are not independent".to_string(),
            ));
        }
        let mut i = tuple.len();
        loop {
            if i == 0 {
                if decomp.len() != subgroup.len()
                    || !subgroup.elements.iter().all(|e| decomp.contains_key(e))
                {
                    return Err(Error::Inconsistency(
                        "cyclic factors do not exhaust N".to_string(),
                    ));
                }
                return Ok(NBasis {
                    subgroup,
                    cyclic,
                    decomp,
                });
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < orders[i] {
                break;
            }
            tuple[i] = 0;
            if i == 0 {
                // handled at loop top on next pass
                continue;
            }
        }
    }
}

/// A character of N: one exponent per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCharacter {
    pub exps: Vec<u64>,
}

impl NCharacter {
    /// Value at an element of N, a single root of unity.
    pub fn value(&self, basis: &NBasis, x: GroupElement) -> Result<RootExp> {
        let tuple = basis.decompose(x)?;
        let mut acc = RootExp::one();
        for (k, &(_, order)) in basis.cyclic.iter().enumerate() {
            acc = acc.mul(RootExp::new(
                (self.exps[k] * tuple[k]) as i64,
                order as i64,
            ));
        }
        Ok(acc)
    }
}

/// All |N| characters of N, lexicographic in exponents.
pub fn enumerate_n_characters(basis: &NBasis) -> Vec<NCharacter> {
    let orders: Vec<u64> = basis.cyclic.iter().map(|&(_, o)| o).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; orders.len()];
    loop {
        out.push(NCharacter { exps: exps.clone() });
        let mut i = exps.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
            if i == 0 {
                return out;
            }
        }
    }
}

/// The coset representative used for induction: the generator outside N.
pub fn coset_representative(params: &FieldParams) -> GroupElement {
    let (pi, qi) = params.twist;
    match params.case {
        CaseTag::A | CaseTag::BQDoubles | CaseTag::CSecond => params.generator_element(qi),
        CaseTag::BPDoubles | CaseTag::CFirst => params.generator_element(pi),
    }
}

/// chi differs from its conjugate by the coset representative.
pub fn is_irreducible(params: &FieldParams, basis: &NBasis, chi: &NCharacter) -> Result<bool> {
    let sigma = coset_representative(params);
    for &(g, _) in &basis.cyclic {
        let conj = params.conjugate_by(sigma, g);
        if chi.value(basis, conj)? != chi.value(basis, g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A two-dimensional representation produced by induction (possibly
/// reducible when the inducing character equals its conjugate).
#[derive(Debug, Clone)]
pub struct InducedRep {
    pub images: Vec<Mat2>,
    pub eps_image: Mat2,
}

impl InducedRep {
    pub fn image(&self, x: GroupElement) -> Mat2 {
        rep_image(&self.images, self.eps_image, x)
    }

    pub fn character_row(&self, elements: &[GroupElement]) -> Vec<CycSum> {
        elements.iter().map(|&x| self.image(x).trace()).collect()
    }
}

/// Induction from a character of N by the coset block formula: an element of
/// N maps to diag(chi(x), chi(s^-1 x s)), one outside N to the antidiagonal
/// matrix with entries chi(x s) and chi(s^-1 x).
pub fn induce(params: &FieldParams, basis: &NBasis, chi: &NCharacter) -> Result<InducedRep> {
    let sigma = coset_representative(params);
    let sigma_inv = params.inverse(sigma);
    let image_of = |x: GroupElement| -> Result<Mat2> {
        if basis.subgroup.contains(x) {
            let a = chi.value(basis, x)?;
            let b = chi.value(basis, params.conjugate_by(sigma, x))?;
            Ok(Mat2::diag(a, b))
        } else {
            let a = chi.value(basis, params.multiply(x, sigma))?;
            let b = chi.value(basis, params.multiply(sigma_inv, x))?;
            Ok(Mat2::anti(a, b))
        }
    };
    let mut images = Vec::with_capacity(params.generators.len());
    for i in 0..params.generators.len() {
        images.push(image_of(params.generator_element(i))?);
    }
    let eps_image = image_of(GroupElement::EPSILON)?;
    Ok(InducedRep { images, eps_image })
}
