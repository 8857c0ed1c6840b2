//! Two-party adjacency protocols with an Equality oracle.
//!
//! A protocol is a tree whose shape depends only on the public transcript:
//! [`Protocol::step`] sees the public state, while each party's bit or oracle
//! operand is computed from its own view. Running a protocol on a pair of
//! vertices records the transcript and its cost.

mod gyarfas;
mod signrank;
mod udg;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use thiserror::Error;

pub use gyarfas::{GyarfasFamily, GyarfasProtocol, GyarfasPublic, GyarfasView, LevelBounds, RecursionEdge};
pub use signrank::{SignRank3Protocol, SignRankPublic, SignRankView};
pub use udg::{UdgProtocol, UdgPublic, UdgView};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProtocolError {
    #[error("graph is not a disjoint union of bicliques")]
    NotEquivalence,
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Alice,
    Bob,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Alice => Role::Bob,
            Role::Bob => Role::Alice,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::Alice => 'A',
            Role::Bob => 'B',
        }
    }
}

/// A protocol output: `Plus` for adjacent, `Minus` for non-adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_adjacent(adjacent: bool) -> Sign {
        if adjacent {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn flip(self) -> Sign {
        Sign::from_adjacent(!self.is_plus())
    }

    /// Flips when `flip` is set.
    pub fn xor(self, flip: bool) -> Sign {
        if flip {
            self.flip()
        } else {
            self
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+1" } else { "-1" })
    }
}

/// What happens at a node of the protocol tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Bit(Role),
    Query,
    Output(Sign),
}

/// An Equality-oracle operand: a tagged tuple of canonical ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EqOperand {
    /// Sent by a party whose input cannot match; never equal across roles.
    Mismatch(Role),
    /// Scan filler beyond the end of a party's list.
    Pad(u32),
    Biclique(u32),
    Component(u32),
    Bag { comp: u32, bag: u32 },
    Part { comp: u32, bag: u32, part: u32 },
    SubBag { part: u32, bag: u32 },
    Cell(i64, i64),
}

impl EqOperand {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        let mut put = |tag: u8, ids: &[i64]| {
            out.push(tag);
            for id in ids {
                out.extend_from_slice(&id.to_le_bytes());
            }
        };
        match *self {
            EqOperand::Mismatch(r) => put(0, &[r as i64]),
            EqOperand::Pad(j) => put(1, &[j as i64]),
            EqOperand::Biclique(b) => put(2, &[b as i64]),
            EqOperand::Component(c) => put(3, &[c as i64]),
            EqOperand::Bag { comp, bag } => put(4, &[comp as i64, bag as i64]),
            EqOperand::Part { comp, bag, part } => put(5, &[comp as i64, bag as i64, part as i64]),
            EqOperand::SubBag { part, bag } => put(6, &[part as i64, bag as i64]),
            EqOperand::Cell(a, b) => put(7, &[a, b]),
        }
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Event {
    Bit { from: Role, value: bool },
    Query { alice: EqOperand, bob: EqOperand, equal: bool },
}

impl Event {
    pub fn outcome(&self) -> bool {
        match self {
            Event::Bit { value, .. } => *value,
            Event::Query { equal, .. } => *equal,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CostMeter {
    pub bits_sent: usize,
    pub eq_calls: usize,
    pub recursion_depth: usize,
}

impl CostMeter {
    pub fn cost(&self) -> usize {
        self.bits_sent + self.eq_calls
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub events: Vec<Event>,
    pub output: Sign,
}

impl Transcript {
    /// `B <bit> <A|B>` and `Q <hex> <hex> <0|1>` lines, then `OUT <+1|-1>`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            match e {
                Event::Bit { from, value } => writeln!(s, "B {} {}", u8::from(*value), from.letter()),
                Event::Query { alice, bob, equal } => {
                    writeln!(s, "Q {} {} {}", alice.to_hex(), bob.to_hex(), u8::from(*equal))
                }
            }
            .unwrap();
        }
        writeln!(s, "OUT {}", self.output).unwrap();
        s
    }

    pub fn outcomes(&self) -> Vec<bool> {
        self.events.iter().map(Event::outcome).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolRun {
    pub transcript: Transcript,
    pub meter: CostMeter,
}

impl ProtocolRun {
    pub fn output(&self) -> Sign {
        self.transcript.output
    }

    pub fn cost(&self) -> usize {
        self.meter.cost()
    }
}

/// A deterministic two-party protocol with an Equality oracle.
pub trait Protocol: Sync {
    /// State determined by the transcript so far.
    type Public: Clone + Send;
    /// One party's knowledge: its input plus whatever it derived.
    type View: Clone + Send;

    /// Number of vertices that can act as inputs.
    fn vertex_count(&self) -> usize;
    /// The ordered input pairs the protocol answers.
    fn pairs(&self) -> Vec<(usize, usize)>;
    /// Ground truth used for checking.
    fn adjacent(&self, x: usize, y: usize) -> bool;

    fn start(&self) -> Self::Public;
    fn view(&self, role: Role, v: usize) -> Self::View;
    fn step(&self, public: &Self::Public) -> Step;
    fn bit(&self, public: &Self::Public, view: &Self::View) -> bool;
    fn operand(&self, public: &Self::Public, view: &Self::View) -> EqOperand;
    fn advance(&self, public: &Self::Public, outcome: bool) -> Self::Public;
    fn update(&self, public: &Self::Public, view: &Self::View, outcome: bool) -> Self::View;

    fn recursion_depth(&self, _public: &Self::Public) -> usize {
        0
    }
}

const STEP_LIMIT: usize = 1 << 16;

/// Runs the protocol with Alice holding `x` and Bob holding `y`.
pub fn run<P: Protocol + ?Sized>(p: &P, x: usize, y: usize) -> ProtocolRun {
    let mut public = p.start();
    let mut alice = p.view(Role::Alice, x);
    let mut bob = p.view(Role::Bob, y);
    let mut events = Vec::new();
    let mut meter = CostMeter::default();
    loop {
        meter.recursion_depth = meter.recursion_depth.max(p.recursion_depth(&public));
        let event = match p.step(&public) {
            Step::Output(output) => {
                return ProtocolRun { transcript: Transcript { events, output }, meter };
            }
            Step::Bit(from) => {
                meter.bits_sent += 1;
                let view = if from == Role::Alice { &alice } else { &bob };
                Event::Bit { from, value: p.bit(&public, view) }
            }
            Step::Query => {
                meter.eq_calls += 1;
                let a = p.operand(&public, &alice);
                let b = p.operand(&public, &bob);
                let equal = a == b;
                Event::Query { alice: a, bob: b, equal }
            }
        };
        let outcome = event.outcome();
        events.push(event);
        assert!(events.len() < STEP_LIMIT, "protocol did not terminate");
        alice = p.update(&public, &alice, outcome);
        bob = p.update(&public, &bob, outcome);
        public = p.advance(&public, outcome);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AllPairsReport {
    pub pairs: usize,
    /// Pairs whose output disagrees with the graph.
    pub mismatches: Vec<(usize, usize)>,
    /// Cost value to number of pairs.
    pub histogram: BTreeMap<usize, usize>,
    pub max_cost: usize,
    pub max_bits: usize,
    pub max_eq_calls: usize,
    pub max_recursion_depth: usize,
}

impl AllPairsReport {
    pub fn is_correct(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn absorb(mut self, other: AllPairsReport) -> AllPairsReport {
        self.pairs += other.pairs;
        self.mismatches.extend(other.mismatches);
        for (c, k) in other.histogram {
            *self.histogram.entry(c).or_default() += k;
        }
        self.max_cost = self.max_cost.max(other.max_cost);
        self.max_bits = self.max_bits.max(other.max_bits);
        self.max_eq_calls = self.max_eq_calls.max(other.max_eq_calls);
        self.max_recursion_depth = self.max_recursion_depth.max(other.max_recursion_depth);
        self
    }

    fn single(x: usize, y: usize, run: &ProtocolRun, adjacent: bool) -> AllPairsReport {
        AllPairsReport {
            pairs: 1,
            mismatches: if run.output().is_plus() == adjacent { Vec::new() } else { vec![(x, y)] },
            histogram: BTreeMap::from([(run.cost(), 1)]),
            max_cost: run.cost(),
            max_bits: run.meter.bits_sent,
            max_eq_calls: run.meter.eq_calls,
            max_recursion_depth: run.meter.recursion_depth,
        }
    }

    /// `cost,count` lines.
    pub fn histogram_csv(&self) -> String {
        let mut s = String::from("cost,count\n");
        for (c, k) in &self.histogram {
            writeln!(s, "{c},{k}").unwrap();
        }
        s
    }
}

/// Runs every pair of the protocol's domain in parallel.
pub fn run_all_pairs<P: Protocol>(p: &P) -> AllPairsReport {
    let mut report = p
        .pairs()
        .into_par_iter()
        .map(|(x, y)| AllPairsReport::single(x, y, &run(p, x, y), p.adjacent(x, y)))
        .reduce(AllPairsReport::default, AllPairsReport::absorb);
    report.mismatches.sort_unstable();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operands_of_different_roles_never_match() {
        assert_ne!(EqOperand::Mismatch(Role::Alice), EqOperand::Mismatch(Role::Bob));
        assert_ne!(EqOperand::Pad(0).to_bytes(), EqOperand::Biclique(0).to_bytes());
        assert_eq!(EqOperand::Cell(-1, 2).to_hex().len(), 34);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Plus.flip(), Sign::Minus);
        assert_eq!(Sign::Minus.xor(true), Sign::Plus);
        assert_eq!(Sign::Minus.xor(false), Sign::Minus);
        assert_eq!(Sign::Plus.to_string(), "+1");
    }
}
