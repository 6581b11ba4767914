//! Extending a precoloured path boundary to a 4-total-colouring of the path.
//!
//! A total colouring of the path `p1 .. pk` is read as the sequence
//! `p1, p1p2, p2, ..., pk` of `2k - 1` colours; it is proper exactly when
//! entries at distance at most 2 differ.

use thiserror::Error;

use crate::colouring::Colour;

/// Colours of `p1`, `p1p2`, `p(k-1)pk`, `pk` on a path with `vertices` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathPrecolouring {
    pub vertices: usize,
    pub first: Colour,
    pub first_edge: Colour,
    pub last_edge: Colour,
    pub last: Colour,
}

impl PathPrecolouring {
    pub fn new(vertices: usize, boundary: [Colour; 4]) -> PathPrecolouring {
        let [first, first_edge, last_edge, last] = boundary;
        PathPrecolouring {
            vertices,
            first,
            first_edge,
            last_edge,
            last,
        }
    }

    pub fn boundary(&self) -> [Colour; 4] {
        [self.first, self.first_edge, self.last_edge, self.last]
    }

    /// Checks the hypotheses under which an extension is guaranteed.
    pub fn validate(&self) -> Result<(), PathError> {
        if self.vertices < 3 {
            return Err(PathError::TooShort(self.vertices));
        }
        let b = self.boundary();
        if let Some(&c) = b.iter().find(|&&c| !(1..=4).contains(&c)) {
            return Err(PathError::BadColour(c));
        }
        if b[0] == b[1] || b[2] == b[3] || (self.vertices == 3 && b[1] == b[2]) {
            return Err(PathError::Improper);
        }
        let distinct = distinct_count(&b);
        if distinct > 3 {
            return Err(PathError::TooManyColours(distinct));
        }
        if b[0] == b[2] && b[1] == b[3] {
            return Err(PathError::ForbiddenPattern);
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("a path needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("colour {0} is outside 1..=4")]
    BadColour(Colour),
    #[error("adjacent boundary elements share a colour")]
    Improper,
    #[error("boundary uses {0} distinct colours, at most 3 are allowed")]
    TooManyColours(usize),
    #[error("boundary has the forbidden pattern ABAB")]
    ForbiddenPattern,
}

fn distinct_count(b: &[Colour]) -> usize {
    let mut seen = [false; 5];
    for &c in b {
        seen[c as usize] = true;
    }
    seen.iter().filter(|&&s| s).count()
}

/// Whether any two entries at distance at most 2 differ.
pub fn is_proper_sequence(seq: &[Colour]) -> bool {
    seq.windows(2).all(|w| w[0] != w[1]) && seq.windows(3).all(|w| w[0] != w[2])
}

/// Picks the colour placed next to the boundary and the spare colour.
///
/// With three boundary colours, `three` is the smallest one used once and
/// `four` the unused colour; with two, both are unused, smallest first.
fn pick_colours(b: [Colour; 4]) -> (Colour, Colour) {
    let mut count = [0usize; 5];
    for c in b {
        count[c as usize] += 1;
    }
    let unused: Vec<Colour> = (1..=4).filter(|&c| count[c as usize] == 0).collect();
    if unused.len() == 1 {
        let three = (1..=4).find(|&c| count[c as usize] == 1).expect("three colours over four slots");
        (three, unused[0])
    } else {
        (unused[0], unused[1])
    }
}

/// Extends the boundary precolouring to a proper sequence of length `2k - 1`.
///
/// Works inward from both ends: each step fixes the entries two places in
/// from the current boundary, keeping the hypotheses for the inner path.
pub fn extend_path(p: &PathPrecolouring) -> Result<Vec<Colour>, PathError> {
    p.validate()?;
    let n = 2 * p.vertices - 1;
    let mut seq = vec![0; n];
    seq[0] = p.first;
    seq[1] = p.first_edge;
    seq[n - 2] = p.last_edge;
    seq[n - 1] = p.last;
    let (mut lo, mut hi) = (0, n - 1);
    while hi - lo + 1 > 5 {
        let b = [seq[lo], seq[lo + 1], seq[hi - 1], seq[hi]];
        let (three, four) = pick_colours(b);
        // Orient so that `three` is not on the near end.
        let forward = b[0] != three && b[1] != three;
        let (second, second_last) = if forward { (b[1], b[2]) } else { (b[2], b[1]) };
        let (near, far) = if forward { (lo + 2, hi - 2) } else { (hi - 2, lo + 2) };
        seq[near] = three;
        let rest: Vec<Colour> = (1..=4).filter(|&c| c != three && c != four).collect();
        let crossed = second != second_last && rest.contains(&second) && rest.contains(&second_last);
        seq[far] = if crossed { second } else { four };
        lo += 1;
        hi -= 1;
        debug_assert!(PathPrecolouring::new(
            (hi - lo) / 2 + 1,
            [seq[lo], seq[lo + 1], seq[hi - 1], seq[hi]]
        )
        .validate()
        .is_ok());
    }
    let around = [seq[lo], seq[lo + 1], seq[hi - 1], seq[hi]];
    seq[lo + 2] = (1..=4).find(|c| !around.contains(c)).expect("at most three boundary colours");
    debug_assert!(is_proper_sequence(&seq));
    Ok(seq)
}
