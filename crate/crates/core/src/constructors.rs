//! Standard families as permutation groups.
//!
//! Parameter choices are deterministic: multipliers and eigenvalues are the
//! smallest residues of the required order, irreducible blocks are
//! companion matrices of the least irreducible factor of `x^q − 1` (see
//! [`gf::poly::monic`] for the order used).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{self, FiniteField, Matrix};
use crate::group::{enumerate, is_prime, Group};
use crate::perm::Permutation;

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructor builds bijections")
}

fn prime(p: u64, what: &str) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} = {p} is not prime")))
    }
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Domain("cyclic group of order 0".into()));
    }
    let gens = if n == 1 {
        vec![]
    } else {
        vec![perm((0..n).map(|i| (i + 1) % n).collect())]
    };
    enumerate(n, &gens)
}

/// Dihedral group of order `2n` on the `n` vertices of a polygon, `n ≥ 3`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(Error::Domain(format!("dihedral({n}) needs n ≥ 3")));
    }
    let rotation = perm((0..n).map(|i| (i + 1) % n).collect());
    let reflection = perm((0..n).map(|i| (n - i) % n).collect());
    enumerate(n, &[rotation, reflection])
}

/// `Dic_n = ⟨a, x | a^{2n}, x² = aⁿ, aˣ = a⁻¹⟩` of order `4n`, acting
/// regularly by right multiplication. Element `aⁱxʲ` is point `2n·j + i`.
pub fn dicyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Domain("dicyclic(0)".into()));
    }
    let m = 2 * n;
    let point = |i: usize, j: usize| j * m + i % m;
    let right_a = (0..2 * m)
        .map(|pt| {
            let (i, j) = (pt % m, pt / m);
            if j == 0 {
                point(i + 1, 0)
            } else {
                point(i + m - 1, 1)
            }
        })
        .collect();
    let right_x = (0..2 * m)
        .map(|pt| {
            let (i, j) = (pt % m, pt / m);
            if j == 0 {
                point(i, 1)
            } else {
                point(i + n, 0)
            }
        })
        .collect();
    enumerate(2 * m, &[perm(right_a), perm(right_x)])
}

pub fn sym(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Domain("sym(0)".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(perm(t));
        gens.push(perm((0..n).map(|i| (i + 1) % n).collect()));
    }
    enumerate(n, &gens)
}

/// Alternating group, generated by the 3-cycles `(1 2 i)`.
pub fn alt(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Domain("alt(0)".into()));
    }
    let gens: Vec<Permutation> = (2..n)
        .map(|i| {
            let mut images: Vec<usize> = (0..n).collect();
            images[0] = 1;
            images[1] = i;
            images[i] = 0;
            perm(images)
        })
        .collect();
    enumerate(n, &gens)
}

/// `A × B` on disjoint point sets (points of `B` follow those of `A`).
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.shifted(0, degree)?);
    }
    for g in b.generators() {
        gens.push(g.shifted(a.degree(), degree)?);
    }
    enumerate(degree, &gens)
}

/// Smallest `r` with multiplicative order `q^m` modulo `p^n`, provided the
/// resulting affine group is Frobenius (`q^m | p − 1`, `q ≠ p`).
pub fn metacyclic_multiplier(p: u64, n: u32, q: u64, m: u32) -> Result<u64> {
    prime(p, "p")?;
    prime(q, "q")?;
    if n == 0 || m == 0 {
        return Err(Error::Domain("exponents n and m must be positive".into()));
    }
    let qm = q.pow(m);
    if p == q || (p - 1) % qm != 0 {
        return Err(Error::Unrealizable(format!(
            "no fixed-point-free multiplier of order {q}^{m} on Z/{p}^{n}: need {q}^{m} | {p}-1"
        )));
    }
    let modulus = p.pow(n);
    let r = (2..modulus)
        .find(|&r| gf::mult_order(r, modulus) == Some(qm))
        .ok_or_else(|| Error::Internal("no unit of the required order".into()))?;
    // r^j ≢ 1 (mod p) for 0 < j < q^m, i.e. no nonzero fixed points.
    if gf::mult_order(r % p, p) != Some(qm) {
        return Err(Error::Internal("multiplier is not fixed-point-free".into()));
    }
    Ok(r)
}

/// `C_{p^n} ⋊ C_{q^m}` acting on `Z/p^n` by `x ↦ r^j x + t`.
pub fn frobenius_metacyclic(p: u64, n: u32, q: u64, m: u32) -> Result<Group> {
    let r = metacyclic_multiplier(p, n, q, m)?;
    let size = p.pow(n) as usize;
    let translate = perm((0..size).map(|x| (x + 1) % size).collect());
    let multiply = perm((0..size).map(|x| (x as u64 * r % size as u64) as usize).collect());
    enumerate(size, &[translate, multiply])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    /// A single irreducible block (companion matrix); needs `q ∤ p − 1`.
    Irreducible,
    /// Scalar `λI`: one homogeneous component.
    Homogeneous,
    /// `diag(λ₁, …, λ_k)` with distinct eigenvalues.
    SplitDistinct,
    /// `diag(λ, λ′, λ′)`: homogeneous components of dimensions 1 and 2.
    MixedDims,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 4] = [
        ModuleKind::Irreducible,
        ModuleKind::Homogeneous,
        ModuleKind::SplitDistinct,
        ModuleKind::MixedDims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Irreducible => "irreducible",
            ModuleKind::Homogeneous => "homogeneous",
            ModuleKind::SplitDistinct => "split-distinct",
            ModuleKind::MixedDims => "mixed-dims",
        }
    }

    /// Accepts the canonical names plus a few synonyms
    /// (`homogeneous-scalar`, `split-repeated`, `three-components`).
    pub fn parse(s: &str) -> Result<ModuleKind> {
        match s {
            "irreducible" => Ok(ModuleKind::Irreducible),
            "homogeneous" | "homogeneous-scalar" | "split-repeated" | "scalar" => {
                Ok(ModuleKind::Homogeneous)
            }
            "split-distinct" | "three-components" | "split" => Ok(ModuleKind::SplitDistinct),
            "mixed-dims" | "mixed" => Ok(ModuleKind::MixedDims),
            _ => Err(Error::Domain(format!("unknown module kind `{s}`"))),
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A `k`-dimensional GF(p)-module for `C_q`, given by the generator's matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStructure {
    pub kind: ModuleKind,
    pub matrix: Matrix,
    /// Diagonal entries for the split kinds.
    pub eigenvalues: Vec<u64>,
    /// Low-first non-leading coefficients of the companion polynomial.
    pub companion: Option<Vec<u64>>,
}

/// A `k × k` matrix over GF(p) of order `q` with no eigenvalue 1 and the
/// requested decomposition.
pub fn matrix_of_order(p: u64, k: usize, q: u64, kind: ModuleKind) -> Result<ModuleStructure> {
    prime(p, "p")?;
    prime(q, "q")?;
    if k == 0 {
        return Err(Error::Domain("module dimension must be positive".into()));
    }
    let unrealizable = |why: String| Error::Unrealizable(format!("{kind} module p={p} k={k} q={q}: {why}"));
    if p == q {
        return Err(unrealizable("q must differ from p".into()));
    }
    let roots = gf::units_of_order(q, p);
    let split = |eigenvalues: Vec<u64>| ModuleStructure {
        kind,
        matrix: Matrix::diagonal(p, &eigenvalues),
        eigenvalues,
        companion: None,
    };
    let module = match kind {
        _ if k == 1 && kind != ModuleKind::MixedDims => {
            let &l = roots.first().ok_or_else(|| unrealizable(format!("{q} ∤ {p}-1")))?;
            split(vec![l])
        }
        ModuleKind::Irreducible => {
            if (p - 1) % q == 0 {
                return Err(unrealizable(format!(
                    "{q} | {p}-1, so irreducible modules are 1-dimensional"
                )));
            }
            let f = gf::least_irreducible_factor_of_xq_minus_1(p, q, k).ok_or_else(|| {
                unrealizable(format!("x^{q} - 1 has no irreducible factor of degree {k}"))
            })?;
            let coeffs = f[..k].to_vec();
            ModuleStructure {
                kind,
                matrix: Matrix::companion(p, &coeffs),
                eigenvalues: Vec::new(),
                companion: Some(coeffs),
            }
        }
        ModuleKind::Homogeneous => {
            let &l = roots.first().ok_or_else(|| unrealizable(format!("{q} ∤ {p}-1")))?;
            split(vec![l; k])
        }
        ModuleKind::SplitDistinct => {
            if roots.len() < k {
                return Err(unrealizable(format!(
                    "GF({p}) has only {} elements of order {q}",
                    roots.len()
                )));
            }
            split(roots[..k].to_vec())
        }
        ModuleKind::MixedDims => {
            if k != 3 {
                return Err(unrealizable("mixed dimensions are defined for k = 3".into()));
            }
            if roots.len() < 2 {
                return Err(unrealizable(format!(
                    "GF({p}) has fewer than two elements of order {q}"
                )));
            }
            split(vec![roots[0], roots[1], roots[1]])
        }
    };
    if module.matrix.order(q) != Some(q) || module.matrix.has_eigenvalue_one() {
        return Err(Error::Internal(format!(
            "{kind} matrix for p={p} k={k} q={q} is not fixed-point-free of order q"
        )));
    }
    Ok(module)
}

/// `GF(p)^k ⋊ ⟨M⟩` acting on vectors (`v ↦ Mv`, translations), where vector
/// `v` is point `Σ vᵢ pⁱ`.
pub fn affine_group(matrix: &Matrix) -> Result<Group> {
    let p = matrix.modulus();
    let k = matrix.size();
    let size = p.pow(k as u32) as usize;
    let decode = |mut x: usize| -> Vec<u64> {
        (0..k)
            .map(|_| {
                let c = x as u64 % p;
                x /= p as usize;
                c
            })
            .collect()
    };
    let encode = |v: &[u64]| v.iter().rev().fold(0u64, |acc, &c| acc * p + c) as usize;
    let mut gens = Vec::new();
    for i in 0..k {
        gens.push(perm(
            (0..size)
                .map(|x| {
                    let mut v = decode(x);
                    v[i] = (v[i] + 1) % p;
                    encode(&v)
                })
                .collect(),
        ));
    }
    gens.push(perm((0..size).map(|x| encode(&matrix.apply(&decode(x)))).collect()));
    enumerate(size, &gens)
}

/// `(C_p)^k ⋊ C_q` with the given module structure.
pub fn frobenius_elem_abelian(p: u64, k: usize, q: u64, kind: ModuleKind) -> Result<Group> {
    affine_group(&matrix_of_order(p, k, q, kind)?.matrix)
}

/// Parameters of a Frobenius group with kernel of prime-power order and
/// complement of prime-power order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kernel", rename_all = "kebab-case")]
pub enum FrobeniusSpec {
    /// Cyclic kernel `C_{p^n}`, cyclic complement `C_{q^m}`.
    Metacyclic { p: u64, n: u32, q: u64, m: u32 },
    /// Elementary abelian kernel `(C_p)^k`, complement `C_q`.
    ElementaryAbelian { p: u64, k: usize, q: u64, module: ModuleKind },
}

impl FrobeniusSpec {
    pub fn build(&self) -> Result<Group> {
        match *self {
            FrobeniusSpec::Metacyclic { p, n, q, m } => frobenius_metacyclic(p, n, q, m),
            FrobeniusSpec::ElementaryAbelian { p, k, q, module } => {
                frobenius_elem_abelian(p, k, q, module)
            }
        }
    }

    /// Checks realizability without building the group.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FrobeniusSpec::Metacyclic { p, n, q, m } => metacyclic_multiplier(p, n, q, m).map(|_| ()),
            FrobeniusSpec::ElementaryAbelian { p, k, q, module } => {
                matrix_of_order(p, k, q, module).map(|_| ())
            }
        }
    }

    pub fn kernel_order(&self) -> u64 {
        match *self {
            FrobeniusSpec::Metacyclic { p, n, .. } => p.pow(n),
            FrobeniusSpec::ElementaryAbelian { p, k, .. } => p.pow(k as u32),
        }
    }

    pub fn complement_order(&self) -> u64 {
        match *self {
            FrobeniusSpec::Metacyclic { q, m, .. } => q.pow(m),
            FrobeniusSpec::ElementaryAbelian { q, .. } => q,
        }
    }

    /// Recipe-style label, e.g. `frobenius_metacyclic p=7 n=1 q=3 m=1`.
    pub fn label(&self) -> String {
        match *self {
            FrobeniusSpec::Metacyclic { p, n, q, m } => {
                format!("frobenius_metacyclic p={p} n={n} q={q} m={m}")
            }
            FrobeniusSpec::ElementaryAbelian { p, k, q, module } => {
                format!("frobenius_elem_abelian p={p} k={k} q={q} module={module}")
            }
        }
    }
}

pub const GRID_PRIMES_P: [u64; 6] = [2, 3, 5, 7, 11, 13];
pub const GRID_PRIMES_Q: [u64; 4] = [2, 3, 5, 7];

/// Every realizable Frobenius parameter set with `p ≤ 13`, `q ≤ 7`:
/// metacyclic with `n ≤ 3`, `m ≤ 2`; elementary abelian of rank 2 and 3
/// with each module kind. Ordered metacyclic first, then by rank, `p`, `q`,
/// kind.
pub fn frobenius_grid() -> Vec<FrobeniusSpec> {
    let mut grid = Vec::new();
    for p in GRID_PRIMES_P {
        for q in GRID_PRIMES_Q {
            for n in 1..=3 {
                for m in 1..=2 {
                    grid.push(FrobeniusSpec::Metacyclic { p, n, q, m });
                }
            }
        }
    }
    for k in [2, 3] {
        for p in GRID_PRIMES_P {
            for q in GRID_PRIMES_Q {
                for module in ModuleKind::ALL {
                    grid.push(FrobeniusSpec::ElementaryAbelian { p, k, q, module });
                }
            }
        }
    }
    grid.retain(|s| s.validate().is_ok());
    grid
}

/// `C_p ⋊ C_{q²}` where the complement acts with kernel of order `q`, so
/// `|Z(G)| = q`. The generator of `C_{q²}` also cycles `q²` extra points,
/// which keeps the action faithful.
pub fn central_extension_example(p: u64, q: u64) -> Result<Group> {
    prime(p, "p")?;
    prime(q, "q")?;
    if p == q || (p - 1) % q != 0 {
        return Err(Error::Unrealizable(format!("need q | p-1, got p={p} q={q}")));
    }
    let r = gf::units_of_order(q, p)[0];
    let (pu, q2) = (p as usize, (q * q) as usize);
    let degree = pu + q2;
    let t = perm((0..degree).map(|x| if x < pu { (x + 1) % pu } else { x }).collect());
    let h = perm(
        (0..degree)
            .map(|x| {
                if x < pu {
                    (x as u64 * r % p) as usize
                } else {
                    pu + (x - pu + 1) % q2
                }
            })
            .collect(),
    );
    enumerate(degree, &[t, h])
}

/// `PSL(2, q)` on the `q + 1` points of the projective line; the field
/// elements come first (in [`FiniteField`] encoding), then `∞`.
pub fn psl2(q: u64) -> Result<Group> {
    let field = FiniteField::new(q)?;
    let n = field.size();
    let inf = n;
    let w = field.primitive_element();
    let w2 = field.mul(w, w);
    let translate = perm((0..=n).map(|x| if x == inf { inf } else { field.add(x, 1) }).collect());
    let scale = perm((0..=n).map(|x| if x == inf { inf } else { field.mul(x, w2) }).collect());
    let invert = perm(
        (0..=n)
            .map(|x| match x {
                _ if x == inf => 0,
                0 => inf,
                _ => field.neg(field.inv(x).expect("nonzero")),
            })
            .collect(),
    );
    enumerate(n + 1, &[translate, scale, invert])
}

/// `SL(2, 3)` on the 8 nonzero vectors of GF(3)²; `(a, b)` is point
/// `a + 3b` (so points run 1..8).
pub fn sl2_3() -> Result<Group> {
    let act = |m: [[u64; 2]; 2]| {
        perm(
            (1..9)
                .map(|x| {
                    let (a, b) = (x % 3, x / 3);
                    let (c, d) = ((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3);
                    (c + 3 * d) as usize - 1
                })
                .collect(),
        )
    };
    enumerate(8, &[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

pub const PRESETS: [&str; 9] = [
    "SL2(3)", "Q8", "A4", "S4", "A5", "A6", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)",
];

/// Named groups; names are matched ignoring case and spaces. `PSL(2,q)` and
/// `L2(q)` accept any prime power `q`.
pub fn preset(name: &str) -> Result<Group> {
    let key: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_uppercase();
    match key.as_str() {
        "SL2(3)" | "SL(2,3)" => sl2_3(),
        "Q8" => dicyclic(2),
        "A4" => alt(4),
        "S4" => sym(4),
        "A5" => alt(5),
        "A6" => alt(6),
        _ => {
            let q = key
                .strip_prefix("PSL(2,")
                .or_else(|| key.strip_prefix("L2("))
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|q| q.parse::<u64>().ok())
                .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
            psl2(q).map_err(|_| Error::UnknownPreset(name.to_string()))
        }
    }
}
