//! Deterministic Schreier-Sims.
//!
//! The base is `0, 1, .., d-1`. Level `k` holds generators of the pointwise
//! stabiliser `G_k` of `0..k` and, for every point `j` in the orbit of `k`
//! under `G_k`, a representative mapping `k` to `j`. `G_k` is generated by
//! the generators stored at level `k` or deeper. Every pair of a coset
//! representative and a generator of its level is multiplied once and the
//! resulting Schreier generator is sifted through the deeper levels; a
//! non-trivial residue becomes a new generator where it stopped. The group
//! order is the product of the orbit sizes.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    generators: Vec<Permutation>,
    /// `(u, u^-1)` with `u(k) = j`, indexed by `j`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds the chain of the group generated by `generators`, all of which
    /// must have degree `degree`.
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let identity = Permutation::identity(degree);
        let levels = (0..degree)
            .map(|k| {
                let mut transversal = vec![None; degree];
                transversal[k] = Some((identity.clone(), identity.clone()));
                Level {
                    generators: Vec::new(),
                    transversal,
                }
            })
            .collect();
        let mut chain = StabilizerChain { degree, levels };
        for g in generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            let (level, residue) = chain.sift(0, g.clone());
            if level < degree {
                chain.add_generator(level, residue);
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Strips `g` (which fixes `0..start`) level by level. Returns where it
    /// stopped and the residue; `degree` means the residue is the identity.
    fn sift(&self, start: usize, mut g: Permutation) -> (usize, Permutation) {
        for k in start..self.degree {
            match &self.levels[k].transversal[g[k]] {
                Some((_, inv)) => g = g.then(inv),
                None => return (k, g),
            }
        }
        (self.degree, g)
    }

    /// Records `g` (which fixes `0..k`) and extends every orbit it acts on.
    fn add_generator(&mut self, k: usize, g: Permutation) {
        self.levels[k].generators.push(g.clone());
        for level in (0..=k).rev() {
            let reps: Vec<Permutation> = self.levels[level]
                .transversal
                .iter()
                .flatten()
                .map(|(u, _)| u.clone())
                .collect();
            for u in reps {
                self.update(level, u.then(&g));
            }
        }
    }

    /// Generators of `G_k`: those stored at level `k` or deeper.
    fn generators_from(&self, k: usize) -> Vec<Permutation> {
        self.levels[k..]
            .iter()
            .flat_map(|l| l.generators.iter().cloned())
            .collect()
    }

    fn update(&mut self, k: usize, h: Permutation) {
        let j = h[k];
        match &self.levels[k].transversal[j] {
            Some((_, inv)) => {
                let schreier = h.then(inv);
                let (level, residue) = self.sift(k + 1, schreier);
                if level < self.degree {
                    self.add_generator(level, residue);
                }
            }
            None => {
                let inv = h.inverse();
                self.levels[k].transversal[j] = Some((h.clone(), inv));
                let gens = self.generators_from(k);
                for s in gens {
                    self.update(k, h.then(&s));
                }
            }
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(0, g.clone()).0 == self.degree
    }

    /// Sizes of the fundamental orbits, one per base point.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().flatten().count())
            .collect()
    }

    /// Base points whose orbit is non-trivial.
    pub fn base(&self) -> Vec<usize> {
        self.orbit_sizes()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 1)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes()
            .into_iter()
            .fold(BigUint::one(), |acc, s| acc * BigUint::from(s))
    }
}

/// Order of the group generated by `generators` (all of one degree).
pub fn group_order(generators: &[Permutation]) -> BigUint {
    match generators.first() {
        None => BigUint::one(),
        Some(g) => StabilizerChain::new(g.degree(), generators).order(),
    }
}
