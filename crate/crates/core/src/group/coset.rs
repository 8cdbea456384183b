//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy
//! with coincidence processing).

use crate::error::{Error, Result};
use crate::group::presentation::{Presentation, Word};
use crate::group::table::GroupTable;

const UNDEF: usize = usize::MAX;

/// Environment variable overriding the default coset cap.
pub const MAX_COSETS_ENV: &str = "FGX_MAX_COSETS";

/// Cap used when nothing better is known about the expected order.
pub const DEFAULT_MAX_COSETS: usize = 200_000;

/// `FGX_MAX_COSETS` if set and parseable, else `fallback`.
pub fn coset_cap(fallback: usize) -> usize {
    std::env::var(MAX_COSETS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(fallback)
}

/// A complete coset table: the right action of every generator and its
/// inverse on the cosets of the trivial subgroup. Coset 0 is the identity.
#[derive(Clone, Debug)]
pub struct CosetTable {
    size: usize,
    cols: usize,
    action: Vec<usize>,
    generators: Vec<String>,
}

impl CosetTable {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Right action of a single letter (`2g` = generator, `2g+1` = inverse).
    pub fn act(&self, coset: usize, letter: usize) -> usize {
        self.action[coset * self.cols + letter]
    }

    pub fn apply(&self, coset: usize, w: &Word) -> usize {
        w.letters().into_iter().fold(coset, |c, l| self.act(c, l))
    }

    /// Coset (element) represented by a word.
    pub fn element(&self, w: &Word) -> usize {
        self.apply(0, w)
    }

    /// Regular representation as a Cayley table, labelled by shortlex words.
    pub fn to_group_table(&self) -> Result<GroupTable> {
        let n = self.size;
        // BFS spanning tree from the identity coset
        let mut parent = vec![(UNDEF, UNDEF); n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        seen[0] = true;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for l in 0..self.cols {
                let d = self.act(c, l);
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = (c, l);
                    let mut w = words[c].clone();
                    w.push(l);
                    words[d] = w;
                    order.push(d);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidTable("coset table is not connected".into()));
        }
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            table[i * n] = i;
        }
        for &j in order.iter().skip(1) {
            let (p, l) = parent[j];
            for i in 0..n {
                table[i * n + j] = self.act(table[i * n + p], l);
            }
        }
        let labels = words.iter().map(|w| render_letters(w, &self.generators)).collect();
        GroupTable::from_flat(n, table, Some(labels))
    }
}

fn render_letters(letters: &[usize], names: &[String]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let name = &names[l / 2];
        let k = if l % 2 == 1 { -(run as i64) } else { run as i64 };
        parts.push(if k == 1 { name.clone() } else { format!("{name}^{k}") });
        i += run;
    }
    parts.join("*")
}

struct Enumerator {
    cols: usize,
    table: Vec<usize>,
    forward: Vec<usize>,
    defined: usize,
    limit: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(cols: usize, limit: usize) -> Self {
        Self {
            cols,
            table: vec![UNDEF; cols],
            forward: vec![0],
            defined: 1,
            limit,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.table[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c * self.cols + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.forward[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.defined >= self.limit {
            return Err(Error::CosetLimit { limit: self.limit });
        }
        let d = self.defined;
        self.defined += 1;
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.forward.push(d);
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.forward[r] != r {
            r = self.forward[r];
        }
        let mut k = c;
        while self.forward[k] != r {
            let next = self.forward[k];
            self.forward[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.forward[kill] = keep;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let e = self.queue[qi];
            qi += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                self.set(f, x ^ 1, UNDEF);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let e1x = self.get(e1, x);
                if e1x != UNDEF {
                    self.merge(f1, e1x);
                    continue;
                }
                let f1x = self.get(f1, x ^ 1);
                if f1x != UNDEF {
                    self.merge(e1, f1x);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x ^ 1, e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0;
        let mut j = w.len();
        loop {
            while i < j && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, w[j - 1] ^ 1) != UNDEF {
                b = self.get(b, w[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, returning the complete
/// coset table (equivalently the regular permutation representation).
pub fn enumerate_cosets(p: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    let cols = 2 * p.generators().len();
    let mut relators: Vec<Vec<usize>> = p
        .expanded_relators()
        .iter()
        .map(Word::letters)
        .filter(|r| !r.is_empty())
        .collect();
    relators.sort_by_key(Vec::len);

    if cols == 0 {
        return Ok(CosetTable {
            size: 1,
            cols: 0,
            action: Vec::new(),
            generators: Vec::new(),
        });
    }

    let mut en = Enumerator::new(cols, max_cosets.max(1));
    let mut c = 0;
    while c < en.defined {
        if en.alive(c) {
            for r in &relators {
                en.scan_and_fill(c, r)?;
                if !en.alive(c) {
                    break;
                }
            }
            if en.alive(c) {
                for x in 0..cols {
                    if en.get(c, x) == UNDEF {
                        en.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }

    let live: Vec<usize> = (0..en.defined).filter(|&c| en.alive(c)).collect();
    let mut renumber = vec![UNDEF; en.defined];
    for (i, &c) in live.iter().enumerate() {
        renumber[c] = i;
    }
    let mut action = Vec::with_capacity(live.len() * cols);
    for &c in &live {
        for x in 0..cols {
            let d = en.get(c, x);
            if d == UNDEF || renumber[d] == UNDEF {
                return Err(Error::InvalidTable(format!(
                    "coset table incomplete at coset {c}, letter {x}"
                )));
            }
            action.push(renumber[d]);
        }
    }
    Ok(CosetTable {
        size: live.len(),
        cols,
        action,
        generators: p.generators().to_vec(),
    })
}

/// Cayley table of the group defined by `p`.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<GroupTable> {
    enumerate_cosets(p, max_cosets)?.to_group_table()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::table::verify_axioms;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let json = crate::group::presentation::PresentationJson {
            generators: gens.iter().map(|s| s.to_string()).collect(),
            relators: rels.iter().map(|s| s.to_string()).collect(),
            central: vec![],
        };
        Presentation::from_json(json).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = todd_coxeter(&pres(&["g"], &["g^1"]), 100).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn dihedral_and_symmetric() {
        let d5 = todd_coxeter(&pres(&["r", "s"], &["r^5", "s^2", "(s*r)^2"]), 1000).unwrap();
        assert_eq!(d5.order(), 10);
        assert!(verify_axioms(&d5).all_pass());
        let s4 = todd_coxeter(
            &pres(&["a", "b", "c"], &["a^2", "b^2", "c^2", "(a*b)^3", "(b*c)^3", "(a*c)^2"]),
            1000,
        )
        .unwrap();
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn exponent_three_burnside_quotient() {
        let g = todd_coxeter(&pres(&["a", "b"], &["a^3", "b^3", "(a*b)^3", "(a^-1*b)^3"]), 1000).unwrap();
        assert_eq!(g.order(), 27);
    }

    #[test]
    fn coset_limit_reported() {
        // free group on one generator is infinite
        let p = pres(&["a", "b"], &["a*b*a^-1*b^-1"]);
        match enumerate_cosets(&p, 50) {
            Err(Error::CosetLimit { limit }) => assert_eq!(limit, 50),
            other => panic!("expected coset limit, got {other:?}"),
        }
    }

    #[test]
    fn labels_are_words() {
        let g = todd_coxeter(&pres(&["a"], &["a^4"]), 100).unwrap();
        assert_eq!(g.label(g.identity()), "1");
        assert!(g.find_label("a").is_some());
    }
}
