//! Cayley tables of finite magmas and the AGT text format.
//!
//! An AGT file is ASCII with LF line endings. Lines starting with `#` are
//! comments. The first significant line holds the order `n`; the next `n`
//! significant lines hold row `i` of the table, i.e. the products
//! `i·0 … i·(n−1)`, as base-10 integers separated by single spaces.

use std::fmt;

use crate::elemset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Largest order accepted by [`AgTable::canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 8;

/// Separator line between tables in a stream of AGT blocks.
pub const STREAM_SEPARATOR: &str = "---";

/// A finite magma on `0..n` given by its Cayley table. Row index is the left operand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AgTable {
    order: usize,
    cells: Vec<u8>,
    name: Option<String>,
}

impl AgTable {
    /// Builds a table from its row-major cells.
    pub fn from_cells(order: usize, cells: Vec<u8>) -> Result<Self> {
        if order == 0 {
            return Err(Error::parse(0, "order must be at least 1"));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        if cells.len() != order * order {
            return Err(Error::parse(0, format!("expected {} cells, found {}", order * order, cells.len())));
        }
        if let Some(&bad) = cells.iter().find(|&&c| c as usize >= order) {
            return Err(Error::ElementOutOfRange { element: bad as usize, order });
        }
        Ok(AgTable { order, cells, name: None })
    }

    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = op(a, b);
                if v >= order {
                    return Err(Error::ElementOutOfRange { element: v, order });
                }
                cells.push(v as u8);
            }
        }
        Self::from_cells(order, cells)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.order + b] as usize
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn universe(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    /// Parses a single AGT block.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text.split('\n').enumerate().map(|(i, l)| (i + 1, l)).collect();
        parse_block(&lines, lines.last().map_or(1, |l| l.0))
    }

    /// Emits the exact AGT text: no comments, single spaces, trailing LF.
    pub fn to_agt(&self) -> String {
        let mut out = String::with_capacity(self.order * self.order * 3 + 4);
        out.push_str(&self.order.to_string());
        out.push('\n');
        for row in self.cells.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Relabels elements along `perm`: the result satisfies
    /// `perm(a)·perm(b) = perm(a·b)`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSearch(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut cells = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u8;
            }
        }
        Ok(AgTable { order: n, cells, name: self.name.clone() })
    }

    /// The lexicographically least relabeling (row-major) of this table.
    pub fn canonical_form(&self) -> Result<Self> {
        let n = self.order;
        if n > CANONICAL_MAX_ORDER {
            return Err(Error::CapExceeded { order: n, cap: CANONICAL_MAX_ORDER });
        }
        let mut best = self.cells.clone();
        let mut scratch = vec![0u8; n * n];
        for_each_permutation(n, |inv| {
            if relabeled_if_smaller(self, inv, &best, &mut scratch) {
                best.copy_from_slice(&scratch);
            }
            true
        });
        Ok(AgTable { order: n, cells: best, name: self.name.clone() })
    }

    /// Whether the table already is its own canonical form.
    pub fn is_canonical(&self) -> Result<bool> {
        let n = self.order;
        if n > CANONICAL_MAX_ORDER {
            return Err(Error::CapExceeded { order: n, cap: CANONICAL_MAX_ORDER });
        }
        let mut scratch = vec![0u8; n * n];
        let mut canonical = true;
        for_each_permutation(n, |inv| {
            if relabeled_if_smaller(self, inv, &self.cells, &mut scratch) {
                canonical = false;
            }
            canonical
        });
        Ok(canonical)
    }
}

/// Writes the relabeling whose inverse is `inv` into `out` and reports whether
/// it is strictly smaller than `bound`. Stops early once it is not.
fn relabeled_if_smaller(t: &AgTable, inv: &[usize], bound: &[u8], out: &mut [u8]) -> bool {
    let n = t.order;
    let mut fwd = [0usize; CANONICAL_MAX_ORDER];
    for (new, &old) in inv.iter().enumerate() {
        fwd[old] = new;
    }
    for i in 0..n {
        for j in 0..n {
            let v = fwd[t.mul(inv[i], inv[j])] as u8;
            let k = i * n + j;
            out[k] = v;
            match v.cmp(&bound[k]) {
                std::cmp::Ordering::Less => {
                    for i2 in 0..n {
                        for j2 in 0..n {
                            let k2 = i2 * n + j2;
                            if k2 > k {
                                out[k2] = fwd[t.mul(inv[i2], inv[j2])] as u8;
                            }
                        }
                    }
                    return true;
                }
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    false
}

/// Calls `visit` with every permutation of `0..n` in lexicographic order until it returns false.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if !visit(&perm) {
            return;
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Parses a stream of AGT blocks separated by `---` lines.
pub fn parse_stream(text: &str) -> Result<Vec<AgTable>> {
    let mut tables = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    let mut last = 1;
    for (i, line) in text.split('\n').enumerate() {
        last = i + 1;
        if line == STREAM_SEPARATOR {
            tables.push(parse_block(&block, i + 1)?);
            block.clear();
        } else {
            block.push((i + 1, line));
        }
    }
    if block.iter().any(|(_, l)| is_significant(l)) || tables.is_empty() {
        tables.push(parse_block(&block, last)?);
    }
    Ok(tables)
}

/// Joins tables into a stream of AGT blocks.
pub fn emit_stream<'a>(tables: impl IntoIterator<Item = &'a AgTable>) -> String {
    let blocks: Vec<String> = tables.into_iter().map(AgTable::to_agt).collect();
    blocks.join(&format!("{STREAM_SEPARATOR}\n"))
}

fn is_significant(line: &str) -> bool {
    !line.is_empty() && !line.starts_with('#')
}

fn parse_block(lines: &[(usize, &str)], end_line: usize) -> Result<AgTable> {
    let mut significant = lines.iter().filter(|(_, l)| is_significant(l));
    let (header_line, header) = significant.next().ok_or_else(|| Error::parse(end_line, "missing order header"))?;
    let order = parse_number(header, *header_line, "order")?;
    if order == 0 {
        return Err(Error::parse(*header_line, "order must be at least 1"));
    }
    if order > MAX_ORDER {
        return Err(Error::parse(*header_line, format!("order {order} exceeds maximum {MAX_ORDER}")));
    }
    let mut cells = Vec::with_capacity(order * order);
    for row in 0..order {
        let (line_no, line) =
            significant.next().ok_or_else(|| Error::parse(end_line, format!("expected {order} rows, found {row}")))?;
        let mut count = 0;
        for token in line.split(' ') {
            let v = parse_number(token, *line_no, "entry")?;
            if v >= order {
                return Err(Error::parse(*line_no, format!("entry {v} out of range for n={order}")));
            }
            count += 1;
            if count > order {
                break;
            }
            cells.push(v as u8);
        }
        if count != order {
            return Err(Error::parse(*line_no, format!("row {row} has {count} entries, expected {order}")));
        }
    }
    if let Some((line_no, _)) = significant.next() {
        return Err(Error::parse(*line_no, format!("unexpected line after {order} rows")));
    }
    Ok(AgTable { order, cells, name: None })
}

fn parse_number(token: &str, line: usize, what: &str) -> Result<usize> {
    if token.is_empty() {
        return Err(Error::parse(line, format!("empty {what}; separate entries by single spaces")));
    }
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("malformed {what} {token:?}")));
    }
    token.parse().map_err(|_| Error::parse(line, format!("malformed {what} {token:?}")))
}

impl fmt::Display for AgTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_agt())
    }
}

impl fmt::Debug for AgTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u8]> = self.cells.chunks(self.order).collect();
        f.debug_struct("AgTable").field("order", &self.order).field("name", &self.name).field("rows", &rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_z3_difference_table() {
        let t = AgTable::parse("3\n0 1 2\n2 0 1\n1 2 0").unwrap();
        assert_eq!(t.order(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(t.mul(a, b), (b + 3 - a) % 3);
            }
        }
    }

    #[test]
    fn parses_trivial_magma() {
        let t = AgTable::parse("1\n0").unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.mul(0, 0), 0);
    }

    #[test]
    fn rejects_out_of_range_entry_with_line() {
        let err = AgTable::parse("2\n0 0\n2 0").unwrap_err();
        assert_eq!(err, Error::parse(3, "entry 2 out of range for n=2"));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("x\n", 1),
            ("0\n", 1),
            ("# c\n2\n0 1\n", 4),
            ("2\n0 1 1\n1 0\n", 2),
            ("2\n0  1\n1 0\n", 2),
            ("2\n0 1\n1\n", 3),
            ("2\n0 1\n1 0\n1 1\n", 4),
        ];
        for (text, line) in cases {
            match AgTable::parse(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn comments_skipped_and_emission_exact() {
        let t = AgTable::parse("# Z2 under +\n2\n# row 0\n0 1\n1 0\n").unwrap();
        assert_eq!(t.to_agt(), "2\n0 1\n1 0\n");
    }

    #[test]
    fn stream_round_trip() {
        let a = AgTable::parse("1\n0\n").unwrap();
        let b = AgTable::parse("2\n0 1\n1 0\n").unwrap();
        let text = emit_stream([&a, &b]);
        assert_eq!(text, "1\n0\n---\n2\n0 1\n1 0\n");
        assert_eq!(parse_stream(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn swapped_z2_has_same_canonical_form() {
        let z2 = AgTable::from_fn(2, |a, b| (a + b) % 2).unwrap();
        let swapped = z2.relabel(&[1, 0]).unwrap();
        assert_ne!(z2, swapped);
        assert_eq!(z2.canonical_form().unwrap(), swapped.canonical_form().unwrap());
    }

    #[test]
    fn left_zero_and_right_zero_are_not_isomorphic() {
        // oracle: both relabelings of each table listed by hand
        // left-zero  a·b = a : [0,0,1,1] and [0,0,1,1] (swap gives 1 1 0 0 -> relabel -> 0 0 1 1)
        // right-zero a·b = b : [0,1,0,1] under either labeling
        let lz = AgTable::from_fn(2, |a, _| a).unwrap();
        let rz = AgTable::from_fn(2, |_, b| b).unwrap();
        assert_eq!(lz.canonical_form().unwrap().cells(), &[0, 0, 1, 1]);
        assert_eq!(rz.canonical_form().unwrap().cells(), &[0, 1, 0, 1]);
    }

    #[test]
    fn canonical_cap_enforced() {
        let t = AgTable::from_fn(9, |_, _| 0).unwrap();
        assert_eq!(t.canonical_form(), Err(Error::CapExceeded { order: 9, cap: 8 }));
    }

    #[test]
    fn permutations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_permutation(3, |p| {
            seen.push(p.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
