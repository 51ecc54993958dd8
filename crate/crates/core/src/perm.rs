//! Permutations on points `{0..degree-1}`, with cycle-notation I/O and
//! lexicographic (Lehmer code) ranking.
//!
//! Composition is a right action throughout the crate: `x^(pq) = (x^p)^q`,
//! i.e. `p.compose(&q)` applies `p` first and `q` second. Points are 0-based
//! internally; all textual I/O is 1-based.

use std::fmt;

use crate::error::{CycleParseError, CycleParseErrorKind};

/// A bijection on `{0..degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// The identity on `n` points. `n` must be at least 1; degree-0
    /// permutations are degenerate and rejected.
    pub fn identity(n: usize) -> Perm {
        assert!(n >= 1, "degenerate degree 0");
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from an explicit image table, validating that it
    /// is a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Perm> {
        let n = images.len();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm { images })
    }

    /// The transposition swapping `a` and `b` (0-based) on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        assert!(a < n && b < n && a != b, "bad transposition ({a},{b}) on {n} points");
        let mut p = Perm::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`: the right-action product `self * other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in compose: {} vs {}",
            self.degree(),
            other.degree()
        );
        Perm {
            images: self.images.iter().map(|&m| other.images[m as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    /// Conjugation `by⁻¹ · self · by`. For a transposition `(i,j)` this is
    /// the transposition `(i^by, j^by)`.
    pub fn conjugate(&self, by: &Perm) -> Perm {
        by.inverse().compose(self).compose(by)
    }

    /// Smallest point moved by this permutation, if any.
    pub fn smallest_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Order of this element: lcm of its cycle lengths.
    pub fn element_order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1u64, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Parity: even iff the permutation is a product of an even number of
    /// transpositions.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that smallest point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Formats in 1-based disjoint cycle notation; the identity prints as `()`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses 1-based cycle notation on `n` points, e.g. `"(1,2)(3,4)"` or
    /// `"(1,2),(2,3)"`. Non-disjoint cycles are composed left to right under
    /// the right-action convention. `"()"` and the empty string both denote
    /// the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm, CycleParseError> {
        assert!(n >= 1, "degenerate degree 0");
        let cycles = parse_cycle_list(text, n)?;
        let mut acc = Perm::identity(n);
        for cycle in cycles {
            let mut p = Perm::identity(n);
            for k in 0..cycle.len() {
                p.images[cycle[k]] = cycle[(k + 1) % cycle.len()] as u32;
            }
            acc = acc.compose(&p);
        }
        Ok(acc)
    }

    /// Lexicographic rank of this permutation among all of its degree, via
    /// the Lehmer code. Degree must be at most 20 so the rank fits in a u64.
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        assert!(n <= 20, "rank overflows u64 beyond degree 20");
        let mut r = 0u64;
        for i in 0..n {
            let smaller_later = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count() as u64;
            r += smaller_later * factorial(n - 1 - i);
        }
        r
    }

    /// Inverse of [`Perm::rank`]: the `r`-th degree-`n` permutation in
    /// lexicographic order. `r` must be below `n!`.
    pub fn unrank(r: u64, n: usize) -> Perm {
        assert!((1..=20).contains(&n), "unrank degree out of range");
        assert!(r < factorial(n), "rank {r} out of range for degree {n}");
        let mut remaining: Vec<u32> = (0..n as u32).collect();
        let mut images = Vec::with_capacity(n);
        let mut r = r;
        for i in 0..n {
            let f = factorial(n - 1 - i);
            let idx = (r / f) as usize;
            r %= f;
            images.push(remaining.remove(idx));
        }
        Perm { images }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.format_cycles())
    }
}

/// `n!` as a u64; valid for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Parses a comma-or-juxtaposition separated list of cycles without composing
/// them, returning 0-based point lists. Shared by [`Perm::parse_cycles`] and
/// the CLI generator-string parser.
pub fn parse_cycle_list(text: &str, n: usize) -> Result<Vec<Vec<usize>>, CycleParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut cycles: Vec<Vec<usize>> = Vec::new();

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && (bytes[*pos] as char).is_whitespace() {
            *pos += 1;
        }
    }

    fn err(position: usize, kind: CycleParseErrorKind) -> CycleParseError {
        CycleParseError { position, kind }
    }

    loop {
        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() {
            break;
        }
        // optional comma between cycles
        if bytes[pos] == b',' {
            if cycles.is_empty() {
                return Err(err(pos, CycleParseErrorKind::Malformed("comma before first cycle")));
            }
            pos += 1;
            skip_ws(bytes, &mut pos);
            if pos >= bytes.len() {
                return Err(err(pos, CycleParseErrorKind::Malformed("trailing comma")));
            }
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, CycleParseErrorKind::UnexpectedChar(bytes[pos] as char)));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            skip_ws(bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == b')' {
                if cycle.is_empty() {
                    // "()" is the identity cycle
                    pos += 1;
                    break;
                }
                return Err(err(pos, CycleParseErrorKind::Malformed("comma before ')'")));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                let kind = if pos < bytes.len() {
                    CycleParseErrorKind::UnexpectedChar(bytes[pos] as char)
                } else {
                    CycleParseErrorKind::Malformed("unclosed cycle")
                };
                return Err(err(pos, kind));
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| err(start, CycleParseErrorKind::Malformed("integer too large")))?;
            if point == 0 || point > n {
                return Err(err(start, CycleParseErrorKind::PointOutOfRange { point, degree: n }));
            }
            let point0 = point - 1;
            if cycle.contains(&point0) {
                return Err(err(start, CycleParseErrorKind::RepeatedPoint(point)));
            }
            cycle.push(point0);
            skip_ws(bytes, &mut pos);
            match bytes.get(pos) {
                Some(b',') => {
                    pos += 1;
                }
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(&c) => return Err(err(pos, CycleParseErrorKind::UnexpectedChar(c as char))),
                None => return Err(err(pos, CycleParseErrorKind::Malformed("unclosed cycle"))),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}
