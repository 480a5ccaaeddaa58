//! Quotients `G/N`, realised as the action of `G` on the right cosets of `N`.

use crate::error::{Error, Result};
use crate::group::{Elem, Group, Limits};
use crate::perm::Permutation;
use crate::subgroup::{self, Subgroup};

#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub kernel: Subgroup,
    pub quotient: Group,
    /// `projection[e]` is the quotient element index of parent element `e`.
    pub projection: Vec<Elem>,
    /// `coset_of[e]`: which coset (numbered by least member) contains `e`.
    pub coset_of: Vec<usize>,
}

impl QuotientPresentation {
    pub fn project(&self, e: Elem) -> Elem {
        self.projection[e as usize]
    }
}

/// Builds `G/N`. Cosets `Nx` are numbered by their least element index, and
/// `g` acts by `Nx ↦ Nxg`; point `i` of the quotient's action is coset `i`.
pub fn quotient(group: &Group, n: &Subgroup) -> Result<QuotientPresentation> {
    if !subgroup::is_normal(group, n)? {
        return Err(Error::NotNormal);
    }
    let order = group.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps: Vec<Elem> = Vec::new();
    for e in 0..order as Elem {
        if coset_of[e as usize] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(e);
        for k in n.elements() {
            coset_of[group.mul(k, e) as usize] = id;
        }
    }
    let index = reps.len();
    let act = |g: Elem| -> Permutation {
        let images: Vec<usize> = reps.iter().map(|&r| coset_of[group.mul(r, g) as usize]).collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    };
    let gen_perms: Vec<Permutation> = group.generator_elems().iter().map(|&g| act(g)).collect();
    let quotient = Group::enumerate(
        index,
        &gen_perms,
        &Limits {
            max_order: index,
            ..Limits::default()
        },
    )?;
    if quotient.order() != index {
        return Err(Error::Internal("coset action is not faithful on G/N".into()));
    }
    // The image of Nx depends only on the coset; walk cosets breadth-first
    // along generators, composing images.
    let mut coset_image: Vec<Option<Elem>> = vec![None; index];
    coset_image[coset_of[0]] = Some(quotient.identity());
    let mut queue = vec![(group.identity(), quotient.identity())];
    let mut i = 0;
    while i < queue.len() {
        let (x, px) = queue[i];
        for (s, &g) in group.generator_elems().iter().enumerate() {
            let y = group.mul(x, g);
            let c = coset_of[y as usize];
            if coset_image[c].is_none() {
                let py = quotient.mul(px, quotient.generator_elems()[s]);
                coset_image[c] = Some(py);
                queue.push((y, py));
            }
        }
        i += 1;
    }
    let projection = coset_of
        .iter()
        .map(|&c| coset_image[c].expect("generators reach every coset"))
        .collect();
    Ok(QuotientPresentation {
        kernel: n.clone(),
        quotient,
        projection,
        coset_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate;
    use crate::structure;

    fn group(d: usize, gens: &[&str]) -> Group {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_with_degree(s, d).unwrap())
            .collect();
        enumerate(d, &gens).unwrap()
    }

    fn assert_homomorphism(g: &Group, q: &QuotientPresentation) {
        for a in 0..g.order() as Elem {
            for &b in g.generator_elems() {
                assert_eq!(
                    q.project(g.mul(a, b)),
                    q.quotient.mul(q.project(a), q.project(b))
                );
            }
        }
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = Subgroup::generated_by_perms(
            &g,
            &[
                Permutation::parse_with_degree("(1 2)(3 4)", 4).unwrap(),
                Permutation::parse_with_degree("(1 3)(2 4)", 4).unwrap(),
            ],
        )
        .unwrap();
        assert!(structure::is_subnormal(&g, &v4).unwrap());
        let q = quotient(&g, &v4).unwrap();
        assert_eq!(q.quotient.order(), 6);
        assert!(!q.quotient.is_abelian());
        let exponent = (0..6).map(|e| q.quotient.order_of(e)).fold(1, crate::perm::lcm);
        assert_eq!(exponent, 6);
        assert_homomorphism(&g, &q);
    }

    #[test]
    fn trivial_and_full_quotients() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.quotient.order(), 24);
        assert_homomorphism(&g, &q);
        let q = quotient(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(q.quotient.order(), 1);
    }

    #[test]
    fn non_normal_kernel_is_rejected() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let t = Subgroup::generated_by_perms(&g, &[Permutation::parse_with_degree("(1 2)", 3).unwrap()]).unwrap();
        assert_eq!(quotient(&g, &t).unwrap_err(), Error::NotNormal);
    }
}
