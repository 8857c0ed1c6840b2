//! Adjacency labels derived from a finished protocol.
//!
//! Every pair of the protocol's domain is replayed once; the transcripts form
//! a tree shared by all labels (the header). A vertex's label lists, for each
//! tree node where it acted in some run, the node id and its contribution: one
//! bit, or the index of its Equality operand in that node's dictionary of
//! 64-bit operand hashes. Decoding walks the header using only two labels.
//!
//! File layout (little-endian):
//!
//! ```text
//! "IMPLREP1" version:u8 N:u64 c:u8 nodes:u32
//! per node: kind:u8 (0 leaf -1, 1 leaf +1, 2 bit A, 3 bit B, 4 query)
//!           internal: child0:u32 child1:u32 (0xFFFFFFFF = never reached)
//!           query:    width:u8 len:u32 hash:u64 * len
//! per vertex: bits:u32 bytes (as Alice), bits:u32 bytes (as Bob)
//! sha256 of everything above
//! ```

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::protocol::{Protocol, Role, Sign, Step};

pub const MAGIC: &[u8; 8] = b"IMPLREP1";
pub const VERSION: u8 = 1;
pub const DEFAULT_CEILING: usize = 16;
const ABSENT: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("protocol cost {cost} exceeds the ceiling {ceiling}")]
    CeilingExceeded { cost: usize, ceiling: usize },
    #[error("two operands share the hash {0:016x}")]
    HashCollision(u64),
    #[error("vertex {vertex} contributes differently at node {node} depending on its partner")]
    NotOneSided { vertex: usize, node: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("not a label file")]
    BadMagic,
    #[error("unsupported version {0}")]
    Version(u8),
    #[error("checksum mismatch")]
    Checksum,
    #[error("unexpected end of data")]
    Truncated,
    #[error("malformed data: {0}")]
    Malformed(String),
    #[error("label has no record for node {0}")]
    MissingRecord(usize),
    #[error("transcript leaves the header tree at node {0}")]
    MissingPrefix(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf(Sign),
    Bit { from: Role, children: [u32; 2] },
    Query { width: u8, dict: Vec<u64>, children: [u32; 2] },
}

/// Records of one vertex, bit-packed least significant bit first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Label {
    pub alice: BitString,
    pub bob: BitString,
}

impl Label {
    /// Payload plus two 32-bit length prefixes.
    pub fn bits(&self) -> usize {
        64 + self.alice.len + self.bob.len
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitString {
    pub bytes: Vec<u8>,
    pub len: usize,
}

impl BitString {
    fn push(&mut self, value: u64, width: u32) {
        for i in 0..width {
            if self.len % 8 == 0 {
                self.bytes.push(0);
            }
            if value >> i & 1 == 1 {
                *self.bytes.last_mut().unwrap() |= 1 << (self.len % 8);
            }
            self.len += 1;
        }
    }

    fn read(&self, at: &mut usize, width: u32) -> Result<u64, DecodeError> {
        if *at + width as usize > self.len {
            return Err(DecodeError::Truncated);
        }
        let mut v = 0u64;
        for i in 0..width {
            let k = *at + i as usize;
            v |= u64::from(self.bytes[k / 8] >> (k % 8) & 1) << i;
        }
        *at += width as usize;
        Ok(v)
    }
}

/// The shared tree plus one label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    cost: usize,
    nodes: Vec<Node>,
    labels: Vec<Label>,
    /// Per role, the nodes where that role contributes; records name a node
    /// by its position here.
    acting: [Vec<usize>; 2],
}

fn acting(nodes: &[Node]) -> [Vec<usize>; 2] {
    let mut out = [Vec::new(), Vec::new()];
    for (u, node) in nodes.iter().enumerate() {
        match node {
            Node::Leaf(_) => {}
            Node::Bit { from, .. } => out[usize::from(*from == Role::Bob)].push(u),
            Node::Query { .. } => {
                out[0].push(u);
                out[1].push(u);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelMeasure {
    pub n: usize,
    pub max_bits: usize,
    pub mean_bits: f64,
    pub bits_per_log_n: f64,
}

pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Contribution {
    Bit(bool),
    Operand(Vec<u8>),
}

struct Trace {
    x: usize,
    y: usize,
    steps: Vec<(Step, Option<Contribution>, Option<Contribution>, bool)>,
    output: Sign,
}

fn trace<P: Protocol>(p: &P, x: usize, y: usize) -> Trace {
    let mut public = p.start();
    let mut alice = p.view(Role::Alice, x);
    let mut bob = p.view(Role::Bob, y);
    let mut steps = Vec::new();
    loop {
        let step = p.step(&public);
        let (a, b, outcome) = match step {
            Step::Output(output) => return Trace { x, y, steps, output },
            Step::Bit(Role::Alice) => {
                let v = p.bit(&public, &alice);
                (Some(Contribution::Bit(v)), None, v)
            }
            Step::Bit(Role::Bob) => {
                let v = p.bit(&public, &bob);
                (None, Some(Contribution::Bit(v)), v)
            }
            Step::Query => {
                let oa = p.operand(&public, &alice);
                let ob = p.operand(&public, &bob);
                let eq = oa == ob;
                (Some(Contribution::Operand(oa.to_bytes())), Some(Contribution::Operand(ob.to_bytes())), eq)
            }
        };
        steps.push((step, a, b, outcome));
        alice = p.update(&public, &alice, outcome);
        bob = p.update(&public, &bob, outcome);
        public = p.advance(&public, outcome);
    }
}

fn hash(bytes: &[u8]) -> u64 {
    let d = Sha256::digest(bytes);
    u64::from_le_bytes(d[..8].try_into().unwrap())
}

struct TrieNode {
    step: Step,
    children: [Option<usize>; 2],
}

/// Replays every pair of `p` and packs the result into labels.
pub fn build_labels<P: Protocol>(p: &P, ceiling: usize) -> Result<LabelSet, LabelError> {
    let traces: Vec<Trace> = p.pairs().into_par_iter().map(|(x, y)| trace(p, x, y)).collect();
    let cost = traces.iter().map(|t| t.steps.len()).max().unwrap_or(0);
    if cost > ceiling {
        return Err(LabelError::CeilingExceeded { cost, ceiling });
    }

    let mut trie: Vec<TrieNode> = Vec::new();
    let n = p.vertex_count();
    // per (vertex, role) the contribution at each trie node
    let mut records: Vec<[HashMap<usize, Contribution>; 2]> = (0..n).map(|_| Default::default()).collect();
    for t in &traces {
        let mut at: Option<usize> = None;
        let steps = t.steps.iter().map(Some).chain(std::iter::once(None));
        let mut last_outcome = false;
        for s in steps {
            let step = s.map_or(Step::Output(t.output), |s| s.0);
            let node = match at {
                None if trie.is_empty() => {
                    trie.push(TrieNode { step, children: [None, None] });
                    0
                }
                None => 0,
                Some(parent) => {
                    let k = usize::from(last_outcome);
                    match trie[parent].children[k] {
                        Some(c) => c,
                        None => {
                            trie.push(TrieNode { step, children: [None, None] });
                            trie[parent].children[k] = Some(trie.len() - 1);
                            trie.len() - 1
                        }
                    }
                }
            };
            debug_assert_eq!(trie[node].step, step, "protocol tree is not public");
            let Some((_, a, b, outcome)) = s else { break };
            for (v, role, c) in [(t.x, 0, a), (t.y, 1, b)] {
                if let Some(c) = c {
                    match records[v][role].get(&node) {
                        Some(old) if old != c => return Err(LabelError::NotOneSided { vertex: v, node }),
                        Some(_) => {}
                        None => {
                            records[v][role].insert(node, c.clone());
                        }
                    }
                }
            }
            last_outcome = *outcome;
            at = Some(node);
        }
    }

    // breadth-first renumbering
    let mut order = Vec::new();
    let mut new_id = vec![ABSENT; trie.len()];
    let mut queue: VecDeque<usize> = if trie.is_empty() { VecDeque::new() } else { VecDeque::from([0]) };
    while let Some(u) = queue.pop_front() {
        new_id[u] = order.len() as u32;
        order.push(u);
        queue.extend(trie[u].children.iter().flatten());
    }

    let mut dicts: HashMap<usize, BTreeMap<u64, Vec<u8>>> = HashMap::new();
    for per_role in &records {
        for map in per_role {
            for (&node, c) in map {
                if let Contribution::Operand(bytes) = c {
                    let h = hash(bytes);
                    let entry = dicts.entry(node).or_default();
                    match entry.get(&h) {
                        Some(old) if old != bytes => return Err(LabelError::HashCollision(h)),
                        _ => {
                            entry.insert(h, bytes.clone());
                        }
                    }
                }
            }
        }
    }

    let child_ids = |u: usize| trie[u].children.map(|c| c.map_or(ABSENT, |c| new_id[c]));
    let nodes: Vec<Node> = order
        .iter()
        .map(|&u| match trie[u].step {
            Step::Output(s) => Node::Leaf(s),
            Step::Bit(from) => Node::Bit { from, children: child_ids(u) },
            Step::Query => {
                let dict: Vec<u64> = dicts.get(&u).map(|d| d.keys().copied().collect()).unwrap_or_default();
                Node::Query { width: ceil_log2(dict.len()) as u8, dict, children: child_ids(u) }
            }
        })
        .collect();

    let acting = acting(&nodes);
    let mut position = [vec![0u64; nodes.len()], vec![0u64; nodes.len()]];
    for (role, list) in acting.iter().enumerate() {
        for (k, &u) in list.iter().enumerate() {
            position[role][u] = k as u64;
        }
    }
    let labels = records
        .iter()
        .map(|per_role| {
            let mut out = [BitString::default(), BitString::default()];
            for (role, map) in per_role.iter().enumerate() {
                let mut entries: Vec<(u32, &Contribution)> = map.iter().map(|(&u, c)| (new_id[u], c)).collect();
                entries.sort_by_key(|e| e.0);
                for (id, c) in entries {
                    out[role].push(position[role][id as usize], ceil_log2(acting[role].len()));
                    match (c, &nodes[id as usize]) {
                        (Contribution::Bit(b), _) => out[role].push(u64::from(*b), 1),
                        (Contribution::Operand(bytes), Node::Query { width, dict, .. }) => {
                            let k = dict.binary_search(&hash(bytes)).expect("hash is in the dictionary");
                            out[role].push(k as u64, u32::from(*width));
                        }
                        _ => unreachable!("operand recorded at a non-query node"),
                    }
                }
            }
            let [alice, bob] = out;
            Label { alice, bob }
        })
        .collect();
    Ok(LabelSet { cost, nodes, labels, acting })
}

fn parse_records(nodes: &[Node], acting: &[usize], bits: &BitString) -> Result<HashMap<usize, u64>, DecodeError> {
    let id_bits = ceil_log2(acting.len());
    let mut at = 0;
    let mut out = HashMap::new();
    while at < bits.len {
        let k = bits.read(&mut at, id_bits)? as usize;
        let id = *acting.get(k).ok_or_else(|| DecodeError::Malformed(format!("record index {k}")))?;
        let width = match nodes.get(id) {
            Some(Node::Bit { .. }) => 1,
            Some(Node::Query { width, .. }) => u32::from(*width),
            _ => return Err(DecodeError::Malformed(format!("record for node {id}"))),
        };
        out.insert(id, bits.read(&mut at, width)?);
    }
    Ok(out)
}

fn decode(nodes: &[Node], acting: &[Vec<usize>; 2], x: &Label, y: &Label) -> Result<Sign, DecodeError> {
    if nodes.is_empty() {
        return Err(DecodeError::MissingPrefix(0));
    }
    let ra = parse_records(nodes, &acting[0], &x.alice)?;
    let rb = parse_records(nodes, &acting[1], &y.bob)?;
    let get = |r: &HashMap<usize, u64>, u: usize| r.get(&u).copied().ok_or(DecodeError::MissingRecord(u));
    let mut u = 0usize;
    for _ in 0..=nodes.len() {
        let (outcome, children) = match &nodes[u] {
            Node::Leaf(s) => return Ok(*s),
            Node::Bit { from: Role::Alice, children } => (get(&ra, u)? == 1, children),
            Node::Bit { from: Role::Bob, children } => (get(&rb, u)? == 1, children),
            Node::Query { children, .. } => (get(&ra, u)? == get(&rb, u)?, children),
        };
        let next = children[usize::from(outcome)];
        if next == ABSENT || next as usize >= nodes.len() {
            return Err(DecodeError::MissingPrefix(u));
        }
        u = next as usize;
    }
    Err(DecodeError::Malformed("cycle in the header tree".into()))
}

impl LabelSet {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn cost(&self) -> usize {
        self.cost
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Adjacency of the holders of `x` (as Alice) and `y` (as Bob), read
    /// from the two labels and the shared header only.
    pub fn decode_labels(&self, x: &Label, y: &Label) -> Result<Sign, DecodeError> {
        decode(&self.nodes, &self.acting, x, y)
    }

    pub fn decode(&self, x: usize, y: usize) -> Result<Sign, DecodeError> {
        let lx = self.labels.get(x).ok_or(DecodeError::OutOfRange(x))?;
        let ly = self.labels.get(y).ok_or(DecodeError::OutOfRange(y))?;
        self.decode_labels(lx, ly)
    }

    pub fn measure(&self) -> LabelMeasure {
        let n = self.labels.len();
        let max_bits = self.labels.iter().map(Label::bits).max().unwrap_or(0);
        let mean_bits =
            if n == 0 { 0.0 } else { self.labels.iter().map(Label::bits).sum::<usize>() as f64 / n as f64 };
        LabelMeasure { n, max_bits, mean_bits, bits_per_log_n: max_bits as f64 / f64::from(ceil_log2(n).max(1)) }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.push(VERSION);
        out.extend_from_slice(&(self.labels.len() as u64).to_le_bytes());
        out.push(self.cost.min(255) as u8);
        out.extend_from_slice(&(self.nodes.len() as u32).to_le_bytes());
        for node in &self.nodes {
            match node {
                Node::Leaf(s) => out.push(u8::from(s.is_plus())),
                Node::Bit { from, children } => {
                    out.push(if *from == Role::Alice { 2 } else { 3 });
                    children.iter().for_each(|c| out.extend_from_slice(&c.to_le_bytes()));
                }
                Node::Query { width, dict, children } => {
                    out.push(4);
                    children.iter().for_each(|c| out.extend_from_slice(&c.to_le_bytes()));
                    out.push(*width);
                    out.extend_from_slice(&(dict.len() as u32).to_le_bytes());
                    dict.iter().for_each(|h| out.extend_from_slice(&h.to_le_bytes()));
                }
            }
        }
        for l in &self.labels {
            for b in [&l.alice, &l.bob] {
                out.extend_from_slice(&(b.len as u32).to_le_bytes());
                out.extend_from_slice(&b.bytes);
            }
        }
        let digest = Sha256::digest(&out);
        out.extend_from_slice(&digest);
        out
    }

    pub fn from_bytes(data: &[u8]) -> Result<LabelSet, DecodeError> {
        if data.len() < MAGIC.len() || &data[..MAGIC.len()] != MAGIC {
            return Err(DecodeError::BadMagic);
        }
        if data.len() < MAGIC.len() + 1 + 32 {
            return Err(DecodeError::Truncated);
        }
        let (body, digest) = data.split_at(data.len() - 32);
        if Sha256::digest(body).as_slice() != digest {
            return Err(DecodeError::Checksum);
        }
        let mut r = Reader { data: body, at: MAGIC.len() };
        let version = r.u8()?;
        if version != VERSION {
            return Err(DecodeError::Version(version));
        }
        let n = r.u64()? as usize;
        let cost = r.u8()? as usize;
        let count = r.u32()? as usize;
        let mut nodes = Vec::with_capacity(count.min(1 << 20));
        for _ in 0..count {
            let kind = r.u8()?;
            let node = match kind {
                0 | 1 => Node::Leaf(Sign::from_adjacent(kind == 1)),
                2 | 3 => Node::Bit {
                    from: if kind == 2 { Role::Alice } else { Role::Bob },
                    children: [r.u32()?, r.u32()?],
                },
                4 => {
                    let children = [r.u32()?, r.u32()?];
                    let width = r.u8()?;
                    let len = r.u32()? as usize;
                    let dict = (0..len).map(|_| r.u64()).collect::<Result<Vec<_>, _>>()?;
                    Node::Query { width, dict, children }
                }
                k => return Err(DecodeError::Malformed(format!("node kind {k}"))),
            };
            nodes.push(node);
        }
        let mut labels = Vec::with_capacity(n.min(1 << 24));
        for _ in 0..n {
            let mut two = [BitString::default(), BitString::default()];
            for b in &mut two {
                let len = r.u32()? as usize;
                b.bytes = r.take(len.div_ceil(8))?.to_vec();
                b.len = len;
            }
            let [alice, bob] = two;
            labels.push(Label { alice, bob });
        }
        if r.at != body.len() {
            return Err(DecodeError::Malformed("trailing bytes".into()));
        }
        let acting = acting(&nodes);
        Ok(LabelSet { cost, nodes, labels, acting })
    }
}

struct Reader<'a> {
    data: &'a [u8],
    at: usize,
}

impl Reader<'_> {
    fn take(&mut self, k: usize) -> Result<&[u8], DecodeError> {
        let end = self.at.checked_add(k).filter(|&e| e <= self.data.len()).ok_or(DecodeError::Truncated)?;
        let s = &self.data[self.at..end];
        self.at = end;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, DecodeError> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, DecodeError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, DecodeError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Pairs of the protocol's domain where the labels disagree with adjacency
/// or fail to decode.
pub fn verify_labels<P: Protocol>(p: &P, set: &LabelSet) -> Vec<(usize, usize)> {
    let mut bad: Vec<(usize, usize)> = p
        .pairs()
        .into_par_iter()
        .filter(|&(x, y)| set.decode(x, y).map_or(true, |s| s.is_plus() != p.adjacent(x, y)))
        .collect();
    bad.sort_unstable();
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{path, random_connected_bipartite, random_equivalence};
    use crate::graph::BipartiteGraph;
    use crate::protocol::GyarfasProtocol;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn equivalence_labels_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = random_equivalence(5, 4, &mut rng);
        let p = GyarfasProtocol::new(g);
        let set = build_labels(&p, DEFAULT_CEILING).unwrap();
        assert_eq!(set.cost(), 2);
        assert!(verify_labels(&p, &set).is_empty());
        let again = LabelSet::from_bytes(&set.to_bytes()).unwrap();
        assert_eq!(again, set);
    }

    #[test]
    fn single_vertex() {
        let p = GyarfasProtocol::new(BipartiteGraph::empty(1, 0));
        let set = build_labels(&p, DEFAULT_CEILING).unwrap();
        assert_eq!(set.decode(0, 0), Ok(Sign::Minus));
    }

    #[test]
    fn same_vertex_on_both_sides_is_rejected() {
        let p = GyarfasProtocol::new(path(5));
        let set = build_labels(&p, DEFAULT_CEILING).unwrap();
        for v in 0..5 {
            assert_eq!(set.decode(v, v), Ok(Sign::Minus));
        }
    }

    #[test]
    fn corruption_and_truncation_fail_closed() {
        let p = GyarfasProtocol::new(path(6));
        let set = build_labels(&p, DEFAULT_CEILING).unwrap();
        let bytes = set.to_bytes();
        let mut flipped = bytes.clone();
        flipped[20] ^= 1;
        assert_eq!(LabelSet::from_bytes(&flipped), Err(DecodeError::Checksum));
        assert!(LabelSet::from_bytes(&bytes[..bytes.len() - 5]).is_err());
        assert_eq!(LabelSet::from_bytes(b"nonsense"), Err(DecodeError::BadMagic));
        let mut short = set.labels[0].clone();
        short.alice.len = short.alice.len.saturating_sub(1);
        assert!(set.decode_labels(&short, &set.labels[1]).is_err());
    }

    #[test]
    fn ceiling_is_enforced() {
        let p = GyarfasProtocol::new(path(8));
        assert!(matches!(build_labels(&p, 1), Err(LabelError::CeilingExceeded { ceiling: 1, .. })));
    }

    #[test]
    fn random_graph_labels_are_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = random_connected_bipartite(12, 12, 0.2, &mut rng).unwrap();
        let p = GyarfasProtocol::new(g);
        let set = build_labels(&p, 64).unwrap();
        assert!(verify_labels(&p, &set).is_empty());
        let m = set.measure();
        assert!(m.max_bits >= 64);
    }
}
