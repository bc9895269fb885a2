//! Fresh name generation.
//!
//! Both calculi assume globally distinct binders. Operations that have to
//! invent names thread a [`NameGen`] through the computation rather than
//! consulting global state, so everything stays reentrant.

use crate::Name;
use std::collections::BTreeSet;

/// A per-call counter plus an avoid set.
#[derive(Debug, Clone, Default)]
pub struct NameGen {
    counter: u64,
    avoid: BTreeSet<Name>,
}

impl NameGen {
    pub fn new() -> Self {
        NameGen::default()
    }

    /// Seed the avoid set with every name that must not be reused.
    pub fn avoiding<I: IntoIterator<Item = Name>>(names: I) -> Self {
        NameGen {
            counter: 0,
            avoid: names.into_iter().collect(),
        }
    }

    pub fn reserve(&mut self, name: &str) {
        self.avoid.insert(name.to_string());
    }

    /// Reserve `name` if it is still free; `false` when already taken.
    pub fn try_reserve(&mut self, name: &str) -> bool {
        self.avoid.insert(name.to_string())
    }

    pub fn reserve_all<'a, I: IntoIterator<Item = &'a Name>>(&mut self, names: I) {
        for n in names {
            self.avoid.insert(n.clone());
        }
    }

    /// A name not yet reserved, derived from `hint`. The result is reserved.
    pub fn fresh(&mut self, hint: &str) -> Name {
        let base: String = hint
            .chars()
            .take_while(|c| *c != '%')
            .collect();
        let base = if base.is_empty() { "x".to_string() } else { base };
        loop {
            let cand = format!("{}%{}", base, self.counter);
            self.counter += 1;
            if self.avoid.insert(cand.clone()) {
                return cand;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_never_collides() {
        let mut g = NameGen::avoiding(vec!["x%0".to_string(), "x%1".to_string()]);
        let a = g.fresh("x");
        let b = g.fresh("x%7");
        assert_ne!(a, b);
        assert!(a != "x%0" && a != "x%1");
        assert!(b.starts_with("x%"));
    }
}
