//! Stored 4-total-colourings of the Petersen and Heawood graphs and of the
//! small deletions of them that the 2-extension colouring builds on.
//!
//! The colourings are found once by constrained search and frozen in
//! `data/patterns.txt`; tests re-derive them and re-check their properties.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::sync::OnceLock;

use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Edge, Graph, Vertex};
use crate::oracle::{self, good_pattern, Filter, NoAbab, TotalGraph};
use crate::recognition::{self, iso, Base};

use super::BasicError;

const FIXTURE: &str = include_str!("../../data/patterns.txt");
pub const FORMAT_VERSION: u32 = 1;

/// The pattern property an entry is derived under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// Any 4-total-colouring.
    Any,
    /// No length-2 path is coloured ABAB.
    AllPathsGood,
    /// No length-2 path through a degree-2 vertex is coloured ABAB; in
    /// particular every length-2 branch has a good pattern.
    BranchesGood,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Any => "any",
            Property::AllPathsGood => "all-paths-good",
            Property::BranchesGood => "branches-good",
        }
    }

    fn parse(s: &str) -> Option<Property> {
        match s {
            "any" => Some(Property::Any),
            "all-paths-good" => Some(Property::AllPathsGood),
            "branches-good" => Some(Property::BranchesGood),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub name: String,
    pub base: Base,
    pub deleted: BTreeSet<Vertex>,
    pub property: Property,
    pub colouring: TotalColouring,
}

impl PatternEntry {
    /// `base - deleted`.
    pub fn graph(&self) -> Graph {
        self.base.graph().without(self.deleted.iter())
    }

    /// Re-checks properness, the stated property and the anchor slots.
    pub fn check(&self) -> Result<(), String> {
        let g = self.graph();
        let report = oracle::check_total_colouring(&g, &self.colouring, 4).map_err(|e| e.to_string())?;
        if !report.is_valid() {
            return Err(format!("{}: {}", self.name, report.violations[0]));
        }
        let bad = bad_paths(&g, &self.colouring, self.property);
        if let Some(p) = bad.first() {
            return Err(format!("{}: path {:?} is coloured ABAB", self.name, p));
        }
        if let Some(orbit) = anchor_slot_orbits(&g)
            .into_iter()
            .find(|orbit| !orbit.iter().any(|&u| slot_open(&g, &self.colouring, u)))
        {
            return Err(format!("{}: no anchor slot usable among {:?}", self.name, orbit));
        }
        Ok(())
    }
}

/// Length-2 paths that the property watches.
pub fn watched_paths(g: &Graph, property: Property) -> Vec<[Vertex; 3]> {
    match property {
        Property::Any => Vec::new(),
        Property::AllPathsGood => oracle::length_two_paths(g),
        Property::BranchesGood => oracle::length_two_paths(g)
            .into_iter()
            .filter(|&[_, y, _]| g.deg(y) == 2)
            .collect(),
    }
}

/// Watched paths coloured ABAB.
pub fn bad_paths(g: &Graph, c: &TotalColouring, property: Property) -> Vec<[Vertex; 3]> {
    watched_paths(g, property)
        .into_iter()
        .filter(|&p| !good_pattern(c, p))
        .collect()
}

/// Length-2 branches `x - m - z`.
pub fn short_branches(g: &Graph) -> Vec<[Vertex; 3]> {
    g.vertices()
        .filter(|&m| g.deg(m) == 2)
        .filter_map(|m| {
            let mut it = g.nbrs(m).iter().copied();
            let (x, z) = (it.next()?, it.next()?);
            (g.deg(x) >= 3 && g.deg(z) >= 3).then_some([x, m, z])
        })
        .collect()
}

/// Degree-2 vertices with both neighbours of degree 3, grouped into orbits
/// of the automorphism group.
pub fn anchor_slot_orbits(g: &Graph) -> Vec<Vec<Vertex>> {
    let slots: Vec<Vertex> = short_branches(g).into_iter().map(|[_, m, _]| m).collect();
    if slots.is_empty() {
        return Vec::new();
    }
    let autos = iso::automorphisms(g);
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for &u in &slots {
        if seen.contains(&u) {
            continue;
        }
        let orbit: BTreeSet<Vertex> = autos.iter().map(|m| m[&u]).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// Whether the two neighbours of `u` share a colour, so an anchor at `u`
/// is reachable by relabelling.
pub fn slot_open(g: &Graph, c: &TotalColouring, u: Vertex) -> bool {
    let mut it = g.nbrs(u).iter();
    match (it.next(), it.next()) {
        (Some(&a), Some(&b)) => c.vertex(a).is_some() && c.vertex(a) == c.vertex(b),
        _ => false,
    }
}

/// Requires every orbit of anchor slots to have an open slot.
struct AnchorSlots {
    /// Per orbit, the element indices of each slot's two neighbours.
    orbits: Vec<Vec<[usize; 2]>>,
    by_element: BTreeMap<usize, Vec<usize>>,
}

impl AnchorSlots {
    fn new(g: &Graph, tg: &TotalGraph) -> AnchorSlots {
        let mut orbits = Vec::new();
        let mut by_element: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for orbit in anchor_slot_orbits(g) {
            let id = orbits.len();
            let pairs: Vec<[usize; 2]> = orbit
                .iter()
                .map(|&u| {
                    let mut it = g.nbrs(u).iter();
                    [tg.vertex(*it.next().unwrap()), tg.vertex(*it.next().unwrap())]
                })
                .collect();
            for pair in &pairs {
                for &el in pair {
                    by_element.entry(el).or_default().push(id);
                }
            }
            orbits.push(pairs);
        }
        AnchorSlots { orbits, by_element }
    }

    fn orbit_alive(&self, id: usize, colours: &[Colour]) -> bool {
        self.orbits[id]
            .iter()
            .any(|&[a, b]| colours[a] == 0 || colours[b] == 0 || colours[a] == colours[b])
    }
}

impl Filter for AnchorSlots {
    fn accept(&self, _tg: &TotalGraph, colours: &[Colour], just_set: usize) -> bool {
        self.by_element
            .get(&just_set)
            .is_none_or(|ids| ids.iter().all(|&id| self.orbit_alive(id, colours)))
    }

    fn accept_complete(&self, _tg: &TotalGraph, colours: &[Colour]) -> bool {
        (0..self.orbits.len()).all(|id| self.orbit_alive(id, colours))
    }
}

/// Entries in table order: name, base, deleted set, property.
fn specs() -> Vec<(&'static str, Base, BTreeSet<Vertex>, Property)> {
    let v = |ids: &[u32]| ids.iter().map(|&i| Vertex(i)).collect::<BTreeSet<_>>();
    vec![
        ("petersen", Base::Petersen, v(&[]), Property::Any),
        ("heawood", Base::Heawood, v(&[]), Property::Any),
        ("petersen-1", Base::Petersen, v(&[0]), Property::AllPathsGood),
        ("heawood-1", Base::Heawood, v(&[0]), Property::BranchesGood),
        ("heawood-2", Base::Heawood, v(&[0, 1]), Property::BranchesGood),
        ("heawood-3", Base::Heawood, heawood_three(), Property::BranchesGood),
    ]
}

/// `{0, 1, w}` with `w` the least vertex leaving a 2-connected remainder
/// that is neither sparse nor a Petersen extension.
pub fn heawood_three() -> BTreeSet<Vertex> {
    let h = recognition::Base::Heawood.graph();
    let two = h.without([Vertex(0), Vertex(1)].iter());
    let w = two
        .vertices()
        .find(|&w| {
            let r = two.without([w].iter());
            r.is_two_connected()
                && !recognition::is_sparse(&r)
                && recognition::match_2extension(&r, Base::Petersen).is_none()
        })
        .expect("a third deletion exists");
    [Vertex(0), Vertex(1), w].into()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternTable {
    pub entries: Vec<PatternEntry>,
}

impl PatternTable {
    /// Searches every entry afresh.
    pub fn derive() -> Result<PatternTable, BasicError> {
        let mut entries = Vec::new();
        for (name, base, deleted, property) in specs() {
            let g = base.graph().without(deleted.iter());
            let tg = TotalGraph::new(&g);
            let no_abab = NoAbab::on_paths(&tg, &watched_paths(&g, property));
            let slots = AnchorSlots::new(&g, &tg);
            let filters: Vec<&dyn Filter> = vec![&no_abab, &slots];
            let colouring =
                oracle::constrained_search_with_budget(&g, &TotalColouring::new(4), 4, &filters, oracle::DEFAULT_BUDGET)?
                    .ok_or_else(|| BasicError::Table(format!("no colouring found for {name}")))?;
            entries.push(PatternEntry {
                name: name.to_string(),
                base,
                deleted,
                property,
                colouring,
            });
        }
        Ok(PatternTable { entries })
    }

    pub fn get(&self, name: &str) -> Option<&PatternEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn check(&self) -> Result<(), String> {
        self.entries.iter().try_for_each(PatternEntry::check)
    }

    /// Line format: `entry <name> <base> <property> <deleted ids, comma
    /// separated or ->`, then `v <id> <c>` and `e <id> <id> <c>` lines, then
    /// `end`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# 4-total-colourings used by the 2-extension colouring").unwrap();
        writeln!(out, "version {FORMAT_VERSION}").unwrap();
        for e in &self.entries {
            let deleted: Vec<String> = e.deleted.iter().map(|v| v.0.to_string()).collect();
            let deleted = if deleted.is_empty() { "-".to_string() } else { deleted.join(",") };
            writeln!(out, "entry {} {} {} {}", e.name, e.base, e.property.name(), deleted).unwrap();
            for (v, c) in e.colouring.vertex_colours() {
                writeln!(out, "v {} {}", v.0, c).unwrap();
            }
            for (edge, c) in e.colouring.edge_colours() {
                let (a, b) = edge.endpoints();
                writeln!(out, "e {} {} {}", a.0, b.0, c).unwrap();
            }
            writeln!(out, "end").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<PatternTable, BasicError> {
        let err = |line: usize, msg: &str| BasicError::Table(format!("line {}: {msg}", line + 1));
        let mut entries = Vec::new();
        let mut current: Option<PatternEntry> = None;
        let mut version = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<u32>().map_err(|_| err(i, "bad number"));
            match words[0] {
                "version" => {
                    let v = num(words.get(1).ok_or_else(|| err(i, "missing version"))?)?;
                    if v != FORMAT_VERSION {
                        return Err(err(i, "unsupported version"));
                    }
                    version = Some(v);
                }
                "entry" => {
                    if current.is_some() || words.len() != 5 {
                        return Err(err(i, "malformed entry header"));
                    }
                    let base = match words[2] {
                        "petersen" => Base::Petersen,
                        "heawood" => Base::Heawood,
                        _ => return Err(err(i, "unknown base")),
                    };
                    let property = Property::parse(words[3]).ok_or_else(|| err(i, "unknown property"))?;
                    let deleted = if words[4] == "-" {
                        BTreeSet::new()
                    } else {
                        words[4].split(',').map(|s| num(s).map(Vertex)).collect::<Result<_, _>>()?
                    };
                    current = Some(PatternEntry {
                        name: words[1].to_string(),
                        base,
                        deleted,
                        property,
                        colouring: TotalColouring::new(4),
                    });
                }
                "v" | "e" => {
                    let entry = current.as_mut().ok_or_else(|| err(i, "colour outside an entry"))?;
                    let vals = words[1..].iter().map(|s| num(s)).collect::<Result<Vec<u32>, _>>()?;
                    match (words[0], vals.as_slice()) {
                        ("v", &[v, c]) => entry.colouring.set_vertex(Vertex(v), c as Colour),
                        ("e", &[a, b, c]) => entry.colouring.set_edge(Edge::new(Vertex(a), Vertex(b)), c as Colour),
                        _ => return Err(err(i, "malformed colour line")),
                    }
                }
                "end" => {
                    entries.push(current.take().ok_or_else(|| err(i, "end without entry"))?);
                }
                _ => return Err(err(i, "unknown directive")),
            }
        }
        if current.is_some() {
            return Err(BasicError::Table("unterminated entry".into()));
        }
        if version.is_none() {
            return Err(BasicError::Table("missing version line".into()));
        }
        Ok(PatternTable { entries })
    }
}

/// The frozen table, parsed and checked on first use.
pub fn pattern_table() -> &'static PatternTable {
    static TABLE: OnceLock<PatternTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let table = PatternTable::parse(FIXTURE).expect("pattern fixture parses");
        table.check().expect("pattern fixture satisfies its properties");
        table
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_is_valid() {
        let t = pattern_table();
        assert_eq!(t.entries.len(), 6);
        t.check().unwrap();
    }

    #[test]
    fn fixture_round_trips() {
        let t = pattern_table();
        assert_eq!(&PatternTable::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn fixture_matches_derivation() {
        assert_eq!(&PatternTable::derive().unwrap(), pattern_table());
    }

    /// Rewrites the fixture: `cargo test -p totalcol regenerate_fixture -- --ignored`.
    #[test]
    #[ignore]
    fn regenerate_fixture() {
        let table = PatternTable::derive().unwrap();
        table.check().unwrap();
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/patterns.txt");
        std::fs::write(path, table.to_text()).unwrap();
    }

    #[test]
    fn parse_errors() {
        assert!(PatternTable::parse("entry x petersen any -\n").is_err());
        assert!(PatternTable::parse("version 9\n").is_err());
        assert!(PatternTable::parse("version 1\nv 1 2\n").is_err());
    }

    #[test]
    fn heawood_shapes() {
        let h = Base::Heawood.graph();
        let b = h.without([Vertex(0), Vertex(1)].iter());
        assert!(b.is_two_connected());
        assert!(recognition::match_2extension(&b, Base::Petersen).is_none());
        assert_eq!(heawood_three().len(), 3);
    }
}
