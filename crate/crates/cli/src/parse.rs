// SPDX-License-Identifier: Apache-2.0

//! Text syntax for points, germs and point lists.

use anyhow::{anyhow, bail, Context, Result};
use masure_core::rational::{parse_q, parse_vector, Vector};
use masure_core::{MasurePoint, SectorGermRef};

/// `"1:-1.5"` or `"0:(0,0,1)"`.
pub fn point(s: &str) -> Result<MasurePoint> {
    let (chart, coord) = s.split_once(':').ok_or_else(|| anyhow!("expected CHART:COORDS, got {s:?}"))?;
    let chart = chart.trim().parse().with_context(|| format!("bad chart in {s:?}"))?;
    Ok(MasurePoint::new(chart, vector(coord)?))
}

pub fn vector(s: &str) -> Result<Vector> {
    Ok(parse_vector(s)?)
}

/// Points separated by `;`. In dimension one a comma also separates points.
pub fn points(s: &str, dim: usize) -> Result<Vec<Vector>> {
    let parts: Vec<&str> = s.split(';').map(str::trim).filter(|p| !p.is_empty()).collect();
    if dim == 1 {
        let mut out = Vec::new();
        for p in parts {
            for x in p.trim_matches(['(', ')', '[', ']']).split(',') {
                out.push(vec![parse_q(x)?]);
            }
        }
        return Ok(out);
    }
    parts.into_iter().map(vector).collect()
}

/// `"+inf@0"`, `"-inf@2"`, or with a Weyl word for the chamber:
/// `"+inf@0/1,0"`.
pub fn germ(s: &str) -> Result<SectorGermRef> {
    let (head, word) = match s.split_once('/') {
        Some((h, w)) => (h, Some(w)),
        None => (s, None),
    };
    let (sign, chart) = head.split_once('@').ok_or_else(|| anyhow!("expected ±inf@CHART, got {s:?}"))?;
    let sign = match sign.trim() {
        "+inf" | "inf" => 1,
        "-inf" => -1,
        other => bail!("unknown germ sign {other:?}"),
    };
    let chart = chart.trim().parse().with_context(|| format!("bad chart in {s:?}"))?;
    let word = match word {
        Some(w) if !w.trim().is_empty() => {
            w.split(',').map(|i| i.trim().parse::<usize>()).collect::<std::result::Result<_, _>>()?
        }
        _ => Vec::new(),
    };
    Ok(SectorGermRef { chart, sign, word })
}

#[cfg(test)]
mod tests {
    use super::*;
    use masure_core::rational::{qf, qvec};

    #[test]
    fn syntax() {
        assert_eq!(point("1:-1.5").unwrap(), MasurePoint::new(1, vec![qf(-3, 2)]));
        assert_eq!(point("0:(0,0,1)").unwrap(), MasurePoint::new(0, qvec(&[0, 0, 1])));
        assert!(point("(0,1)").is_err());
        assert_eq!(points("0.3,1.7", 1).unwrap(), vec![vec![qf(3, 10)], vec![qf(17, 10)]]);
        assert_eq!(points("(1,0,0); (0,1,0)", 3).unwrap().len(), 2);
        assert_eq!(germ("+inf@0").unwrap(), SectorGermRef::plus_infinity(0));
        assert_eq!(germ("-inf@2/1,0").unwrap(), SectorGermRef { chart: 2, sign: -1, word: vec![1, 0] });
        assert!(germ("up@0").is_err());
    }
}
