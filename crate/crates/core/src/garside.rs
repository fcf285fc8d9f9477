//! Left normal forms in a Garside structure, shared by the classical and
//! dual structures. A braid is kept as `G^p s₁⋯s_r` and letters are
//! absorbed one simple at a time with right-to-left local slides.

/// Operations a simple element must provide to be normalized.
pub(crate) trait GarsideSimple: Clone + PartialEq {
    fn strands(&self) -> usize;
    fn is_trivial(&self) -> bool;
    fn is_garside(&self) -> bool;
    /// Right complement `s⁻¹G`.
    fn right_complement(&self) -> Self;
    /// Greatest common left divisor.
    fn meet(&self, other: &Self) -> Self;
    /// `s·t`, for `t ≼ ∂s`.
    fn times_divisor(&self, t: &Self) -> Self;
    /// `t⁻¹s`, for `t ≼ s`.
    fn left_quotient(&self, t: &Self) -> Self;
    /// `G^{-k} s G^k`.
    fn tau(&self, k: i64) -> Self;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct NormalForm<S> {
    pub n: usize,
    pub p: i64,
    pub factors: Vec<S>,
}

impl<S: GarsideSimple> NormalForm<S> {
    pub fn identity(n: usize) -> Self {
        NormalForm { n, p: 0, factors: Vec::new() }
    }

    /// Replaces `(a, b)` by `(a·t, t⁻¹b)` with `t = ∂a ∧ b`. Returns false
    /// when the pair was already left-weighted.
    fn slide(&mut self, i: usize) -> bool {
        let t = self.factors[i].right_complement().meet(&self.factors[i + 1]);
        if t.is_trivial() {
            return false;
        }
        let a = self.factors[i].times_divisor(&t);
        let b = self.factors[i + 1].left_quotient(&t);
        self.factors[i] = a;
        self.factors[i + 1] = b;
        true
    }

    pub fn push_simple(&mut self, s: S) {
        if s.is_trivial() {
            return;
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 && self.slide(i - 1) {
            i -= 1;
        }
        let lead = self.factors.iter().take_while(|f| f.is_garside()).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.p += lead as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_trivial()) {
            self.factors.pop();
        }
    }

    /// Right multiplication by `G^k`.
    pub fn push_garside_power(&mut self, k: i64) {
        if k == 0 {
            return;
        }
        self.p += k;
        for f in &mut self.factors {
            *f = f.tau(k);
        }
    }

    /// Right multiplication by `s⁻¹ = ∂s·G⁻¹`.
    pub fn push_inverse_simple(&mut self, s: S) {
        if s.is_trivial() {
            return;
        }
        self.push_simple(s.right_complement());
        self.push_garside_power(-1);
    }

    pub fn is_left_weighted_pair(a: &S, b: &S) -> bool {
        a.right_complement().meet(b).is_trivial()
    }

    /// Checks the normal-form invariants.
    pub fn is_normal(&self) -> bool {
        self.factors.iter().all(|f| !f.is_trivial() && !f.is_garside() && f.strands() == self.n)
            && self.factors.windows(2).all(|w| Self::is_left_weighted_pair(&w[0], &w[1]))
    }
}
