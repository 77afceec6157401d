use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylElement};
use crate::scalar::ExactField;

/// The restricted Weyl group with a memoized Bruhat order.
#[derive(Clone, Debug)]
pub struct RestrictedWeylGroup<F> {
    roots: RootSystem<F>,
    cache: Arc<Mutex<HashMap<(WeylElement, WeylElement), bool>>>,
}

impl<F: ExactField> RestrictedWeylGroup<F> {
    pub(crate) fn new(roots: RootSystem<F>) -> Self {
        Self { roots, cache: Arc::default() }
    }

    pub fn root_system(&self) -> &RootSystem<F> {
        &self.roots
    }

    pub fn elements(&self) -> Vec<WeylElement> {
        self.roots.elements()
    }

    pub fn order(&self) -> u128 {
        self.roots.weyl_order()
    }

    /// `l(w s_i) < l(w)`, i.e. `w alpha_i` is negative.
    fn has_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        let alpha = &self.roots.simple_roots()[i - 1];
        !self.roots.is_positive_root(&w.apply(alpha))
    }

    /// Bruhat order `v <= w`. For a right descent `s` of `w`,
    /// `v <= w` iff `vs <= ws` when `vs < v`, and iff `v <= ws` otherwise.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        for x in [v, w] {
            if !self.roots.contains(x) {
                return Err(Error::Parameter(format!(
                    "{x} is not an element of W({})",
                    self.roots.label()
                )));
            }
        }
        Ok(self.leq(v, w))
    }

    fn leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        if v.length() > w.length() {
            return false;
        }
        if w.is_identity() {
            return v.is_identity();
        }
        let key = (v.clone(), w.clone());
        if let Some(&hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit;
        }
        let i = (1..=self.roots.rank())
            .find(|&i| self.has_right_descent(w, i))
            .expect("a nonidentity element has a descent");
        let s = self.roots.simple_reflection(i).expect("index in range");
        let ws = self.roots.compose(w, &s);
        let out = if self.has_right_descent(v, i) {
            self.leq(&self.roots.compose(v, &s), &ws)
        } else {
            self.leq(v, &ws)
        };
        self.cache.lock().expect("cache lock").insert(key, out);
        out
    }

    /// `{ v : v <= w }`.
    pub fn lower_interval(&self, w: &WeylElement) -> Result<Vec<WeylElement>> {
        let mut out = Vec::new();
        for v in self.elements() {
            if self.bruhat_leq(&v, w)? {
                out.push(v);
            }
        }
        Ok(out)
    }
}
