use std::fmt;
use std::str::FromStr;

/// An inclusive `lo..hi` range of small integers; a bare `n` means `n..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: u32,
    pub hi: u32,
}

impl Span {
    pub fn single(n: u32) -> Self {
        Span { lo: n, hi: n }
    }

    pub fn iter(self) -> impl Iterator<Item = u32> + Clone {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?} in range {s:?}: {e}"))
        };
        let span = match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Span { lo: num(lo)?, hi: num(hi)? }
            }
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// A `g,r,d` triple on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple(pub u32, pub u32, pub u32);

impl FromStr for Triple {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [g, r, d] = parts[..] else {
            return Err(format!("expected g,r,d but got {s:?}"));
        };
        let n = |t: &str| t.parse::<u32>().map_err(|e| format!("bad entry {t:?} in {s:?}: {e}"));
        Ok(Triple(n(g)?, n(r)?, n(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("3".parse::<Span>().unwrap(), Span::single(3));
        assert_eq!("1..4".parse::<Span>().unwrap(), Span { lo: 1, hi: 4 });
        assert_eq!("1..=4".parse::<Span>().unwrap(), Span { lo: 1, hi: 4 });
        assert!("4..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
        assert_eq!("2..5".parse::<Span>().unwrap().iter().count(), 4);
    }

    #[test]
    fn triples() {
        assert_eq!("10,4,12".parse::<Triple>().unwrap(), Triple(10, 4, 12));
        assert!("10,4".parse::<Triple>().is_err());
    }
}
