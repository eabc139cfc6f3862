use super::reduce::{reduce_terms, Leads};
use crate::polyring::{Monomial, Polynomial, Ring};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    ring: Ring,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    leads: Leads,
    pairs: Vec<Pair>,
}

fn lead(p: &Polynomial) -> Monomial {
    p.terms()[0].0
}

impl State {
    fn reduce(&self, f: &Polynomial) -> Polynomial {
        let terms = reduce_terms(f, &self.polys, &self.leads);
        Polynomial::from_sorted_unchecked(&self.ring, terms).monic()
    }

    /// Gebauer–Möller update with the new monic element `h`.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let hi = self.polys.len();
        let lh = lead(&h);
        self.polys.push(h);
        self.sugar.push(sugar);

        // New pairs (g, h), pruned by the chain and product criteria.
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = lead(&self.polys[g]);
                (g, lg.lcm(&lh), lg.is_coprime(&lh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = cand.pop() {
            let dominated = |o: &(usize, Monomial, bool)| o.1.divides(&c.1);
            if c.2 || (!cand.iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push(c);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|c| !c.2)
            .map(|(g, l, _)| {
                let lg = lead(&self.polys[g]);
                let s = (self.sugar[g] + l.degree() - lg.degree())
                    .max(sugar + l.degree() - lh.degree());
                Pair {
                    i: g,
                    j: hi,
                    lcm: l,
                    sugar: s,
                }
            })
            .collect();

        // Old pairs killed by the new lead.
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = lead(&polys[p.i]).lcm(&lh);
            let lj = lead(&polys[p.j]).lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        // Elements whose lead is a multiple of the new one leave the basis.
        let polys = &self.polys;
        let mut removed = Vec::new();
        self.active.retain(|&g| {
            let keep = !lh.divides(&lead(&polys[g]));
            if !keep {
                removed.push(g);
            }
            keep
        });
        for g in removed {
            self.leads.remove_index(g);
        }
        self.active.push(hi);
        self.leads.push(lh, hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let qf = lead(f).quotient_of(&p.lcm).unwrap();
        let qg = lead(g).quotient_of(&p.lcm).unwrap();
        let a = f.mul_term(&qf, 1);
        let b = g.mul_term(&qg, 1);
        &a - &b
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the order
/// of `ring`, sorted by ascending lead monomial.
pub(crate) fn reduced_basis(ring: &Ring, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.to_ring(ring).expect("generator ring").monic())
        .collect();
    if input.iter().any(|g| g.is_constant()) {
        return vec![Polynomial::one(ring)];
    }
    let order = ring.order().clone();
    input.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| order.cmp(&lead(a), &lead(b)))
    });
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        leads: Leads::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let sugar = g.degree().unwrap();
        let h = st.reduce(&g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        st.insert(h, sugar);
    }
    while let Some(pair) = st.select() {
        let s = st.spoly(&pair);
        if s.is_zero() {
            continue;
        }
        let h = st.reduce(&s);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        st.insert(h, pair.sugar);
    }
    let basis: Vec<Polynomial> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    interreduce(ring, basis)
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub(crate) fn interreduce(ring: &Ring, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order().clone();
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(&lead(a), &lead(b)));
    for g in sorted {
        let lg = lead(&g);
        if minimal.iter().any(|m| lead(m).divides(&lg)) {
            continue;
        }
        minimal.push(g);
    }
    // A tail term is below its own lead, so the lead never divides it and
    // the whole minimal set can serve as reducer.
    let leads = Leads::from_basis(&minimal);
    minimal
        .iter()
        .map(|g| {
            let tail = Polynomial::from_sorted_unchecked(ring, g.terms()[1..].to_vec());
            let mut terms = vec![g.terms()[0]];
            terms.extend(reduce_terms(&tail, &minimal, &leads));
            Polynomial::from_sorted_unchecked(ring, terms)
        })
        .collect()
}
