//! Finite automata compiled from [`LangExpr`], subset construction, and DOT
//! export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{HairpinError, Result};
use crate::expr::LangExpr;
use crate::word::{Alphabet, Word};

/// A finite automaton over the letters of an alphabet. `None` labels are
/// ε-transitions; deterministic automata have none and at most one edge per
/// `(state, letter)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    letters: Vec<u8>,
    start: usize,
    accepting: Vec<bool>,
    edges: Vec<Vec<(Option<u8>, usize)>>,
    deterministic: bool,
}

impl Automaton {
    pub fn num_states(&self) -> usize {
        self.edges.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn edges(&self, state: usize) -> &[(Option<u8>, usize)] {
        &self.edges[state]
    }

    fn closure(&self, states: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = states.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &(label, t) in &self.edges[s] {
                if label.is_none() && states.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    fn step(&self, states: &BTreeSet<usize>, letter: u8) -> BTreeSet<usize> {
        let mut next: BTreeSet<usize> = states
            .iter()
            .flat_map(|&s| self.edges[s].iter())
            .filter(|&&(label, _)| label == Some(letter))
            .map(|&(_, t)| t)
            .collect();
        self.closure(&mut next);
        next
    }
}

struct Builder {
    edges: Vec<Vec<(Option<u8>, usize)>>,
}

impl Builder {
    fn state(&mut self) -> usize {
        self.edges.push(Vec::new());
        self.edges.len() - 1
    }

    fn edge(&mut self, from: usize, label: Option<u8>, to: usize) {
        self.edges[from].push((label, to));
    }

    /// Spells `w` from `from` and returns the state reached.
    fn chain(&mut self, from: usize, w: &Word) -> usize {
        let mut cur = from;
        for &c in w.as_bytes() {
            let next = self.state();
            self.edge(cur, Some(c), next);
            cur = next;
        }
        cur
    }

    /// Loops every token through `hub`.
    fn star<'a>(&mut self, hub: usize, tokens: impl Iterator<Item = &'a Word>) {
        for t in tokens {
            let bytes = t.as_bytes();
            let Some((&last, init)) = bytes.split_last() else {
                continue;
            };
            let end = self.chain(hub, &Word::from_bytes(init));
            self.edge(end, Some(last), hub);
        }
    }

    /// Returns `(entry, exit)` of a fragment accepting `L(e)`.
    fn build(&mut self, e: &LangExpr) -> (usize, usize) {
        match e {
            LangExpr::Atom(w) => {
                let entry = self.state();
                let exit = self.chain(entry, w);
                (entry, exit)
            }
            LangExpr::StarSet(set) => {
                let hub = self.state();
                self.star(hub, set.iter());
                (hub, hub)
            }
            LangExpr::AtLeast(w, c) => {
                let entry = self.state();
                let mut cur = entry;
                for _ in 0..*c {
                    cur = self.chain(cur, w);
                }
                let hub = if cur == entry {
                    cur
                } else {
                    let hub = self.state();
                    self.edge(cur, None, hub);
                    hub
                };
                self.star(hub, std::iter::once(w));
                (entry, hub)
            }
            LangExpr::Concat(parts) => {
                let mut frags = parts.iter().map(|p| self.build(p)).collect::<Vec<_>>();
                if frags.is_empty() {
                    let s = self.state();
                    frags.push((s, s));
                }
                for pair in frags.windows(2) {
                    self.edge(pair[0].1, None, pair[1].0);
                }
                (frags[0].0, frags[frags.len() - 1].1)
            }
            LangExpr::Union(parts) => {
                let entry = self.state();
                let exit = self.state();
                for p in parts {
                    let (a, b) = self.build(p);
                    self.edge(entry, None, a);
                    self.edge(b, None, exit);
                }
                (entry, exit)
            }
        }
    }
}

/// Compiles `e` into an automaton with ε-transitions accepting exactly `L(e)`.
pub fn compile(e: &LangExpr, alphabet: &Alphabet) -> Automaton {
    let mut b = Builder { edges: Vec::new() };
    let (start, exit) = b.build(e);
    let mut accepting = vec![false; b.edges.len()];
    accepting[exit] = true;
    Automaton {
        letters: alphabet.letters().to_vec(),
        start,
        accepting,
        edges: b.edges,
        deterministic: false,
    }
}

/// Subset construction over reachable subsets; no dead state, no
/// minimization. States are numbered in discovery order.
pub fn determinize(a: &Automaton) -> Automaton {
    let mut init = BTreeSet::from([a.start]);
    a.closure(&mut init);
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut subsets = vec![init.clone()];
    index.insert(init, 0);
    let mut edges: Vec<Vec<(Option<u8>, usize)>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        for &c in &a.letters {
            let next = a.step(&subsets[id], c);
            if next.is_empty() {
                continue;
            }
            let target = match index.get(&next) {
                Some(&t) => t,
                None => {
                    let t = subsets.len();
                    index.insert(next.clone(), t);
                    subsets.push(next);
                    edges.push(Vec::new());
                    queue.push_back(t);
                    t
                }
            };
            edges[id].push((Some(c), target));
        }
    }
    let accepting = subsets
        .iter()
        .map(|set| set.iter().any(|&s| a.accepting[s]))
        .collect();
    Automaton {
        letters: a.letters.clone(),
        start: 0,
        accepting,
        edges,
        deterministic: true,
    }
}

/// Runs `z` through `a`.
pub fn accepts(a: &Automaton, z: &Word) -> Result<bool> {
    if let Some(&c) = z.as_bytes().iter().find(|c| !a.letters.contains(c)) {
        return Err(HairpinError::AlphabetMismatch(c as char));
    }
    let mut cur = BTreeSet::from([a.start]);
    a.closure(&mut cur);
    for &c in z.as_bytes() {
        cur = a.step(&cur, c);
        if cur.is_empty() {
            return Ok(false);
        }
    }
    Ok(cur.iter().any(|&s| a.accepting[s]))
}

/// Graphviz rendering. States reachable from the start are numbered
/// breadth-first, following edges in label order.
pub fn to_dot(a: &Automaton) -> String {
    let mut order = vec![usize::MAX; a.num_states()];
    let mut seq = Vec::new();
    let mut queue = VecDeque::from([a.start]);
    order[a.start] = 0;
    seq.push(a.start);
    while let Some(s) = queue.pop_front() {
        for &(_, t) in sorted_edges(a, s).iter() {
            if order[t] == usize::MAX {
                order[t] = seq.len();
                seq.push(t);
                queue.push_back(t);
            }
        }
    }

    let mut out = String::new();
    out.push_str("digraph automaton {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");
    out.push_str("  start [shape=point];\n");
    out.push_str("  start -> 0;\n");
    for (id, &s) in seq.iter().enumerate() {
        if a.accepting[s] {
            let _ = writeln!(out, "  {id} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {id};");
        }
    }
    for &s in &seq {
        for (label, t) in sorted_edges(a, s) {
            let text = match label {
                Some(c) => escape_label(c),
                None => "ε".to_string(),
            };
            let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", order[s], order[t], text);
        }
    }
    out.push_str("}\n");
    out
}

fn sorted_edges(a: &Automaton, s: usize) -> Vec<(Option<u8>, usize)> {
    let mut e = a.edges[s].clone();
    e.sort();
    e.dedup();
    e
}

fn escape_label(c: u8) -> String {
    match c {
        b'"' => "\\\"".to_string(),
        b'\\' => "\\\\".to_string(),
        _ => (c as char).to_string(),
    }
}
