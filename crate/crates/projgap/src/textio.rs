//! Plain-text formats: point sets (one point per line, `#` comments),
//! certificates (header comment plus witness), and CSV bound tables.

use crate::bounds::{BoundEvaluation, ExtremalCertificate};
use crate::error::{Error, Result};
use crate::geometry::{is_subset_of_x, Point, PointSet};
use crate::order::cmp_balanced_unchecked;

/// Parses the shared point-set format: one point per line, coordinates
/// space-separated; blank lines and lines starting with `#` are skipped.
/// The dimension is inferred from the first data line unless declared, and
/// an input without data lines needs the declared dimension.
pub fn parse_point_set(text: &str, declared_dim: Option<usize>) -> Result<PointSet> {
    if declared_dim == Some(0) {
        return Err(Error::DimensionTooSmall { got: 0, min: 1 });
    }
    let mut dim = declared_dim;
    let mut points: Vec<(usize, Point)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut coords = Vec::new();
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected an integer, found {token:?}"),
            })?;
            coords.push(value);
        }
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {d} coordinates, found {}", coords.len()),
                });
            }
            Some(_) => {}
        }
        let point = Point::new(coords).map_err(|_| Error::Parse {
            line: line_no,
            msg: "empty point".into(),
        })?;
        points.push((line_no, point));
    }
    let dim = dim.ok_or(Error::Parse {
        line: 0,
        msg: "no data lines; declare a dimension for the empty set".into(),
    })?;
    let mut seen = std::collections::BTreeSet::new();
    for (line_no, point) in &points {
        if !seen.insert(point.clone()) {
            return Err(Error::Parse {
                line: *line_no,
                msg: format!("duplicate point {point}"),
            });
        }
    }
    PointSet::from_points(dim, points.into_iter().map(|(_, p)| p))
}

/// Serializes one point per line: in increasing balanced order when the set
/// lies in X_n, lexicographically otherwise. Round-trips through
/// [`parse_point_set`].
pub fn serialize_point_set(a: &PointSet) -> String {
    let mut points: Vec<&Point> = a.iter().collect();
    if is_subset_of_x(a) {
        points.sort_by(|x, y| cmp_balanced_unchecked(x, y));
    }
    let mut out = String::new();
    for p in points {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

/// Certificate header plus the witness in the shared format. The header is
/// a comment line, so certificate files parse as plain point sets.
pub fn serialize_certificate(cert: &ExtremalCertificate) -> String {
    let mut header = format!(
        "# method={} value={} n={} m={} quantity={}",
        cert.method, cert.value, cert.dim, cert.size, cert.quantity
    );
    if let Some(exhaustive) = cert.exhaustive {
        header.push_str(&format!(" exhaustive={exhaustive}"));
    }
    header.push('\n');
    header.push_str(&serialize_point_set(&cert.witness));
    header
}

/// Formats with the given number of significant digits, plain decimal.
fn fmt_sig(x: f64, sig: u32) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// CSV with header `n,m,g,bound,ratio`; reals carry 6 significant digits
/// and the ratio column is empty where the ratio is undefined.
pub fn table_to_csv(rows: &[BoundEvaluation]) -> String {
    let mut out = String::from("n,m,g,bound,ratio\n");
    for row in rows {
        let ratio = row.ratio.map(|r| fmt_sig(r, 6)).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.dim,
            row.size,
            row.exact,
            fmt_sig(row.bound, 6),
            ratio
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_bound, g_exact, gap_table};
    use crate::oracle::{min_gap_bruteforce, SearchOptions};
    use crate::testutil::{pt, set};

    #[test]
    fn parse_basic() {
        let a = parse_point_set("0 0\n1 0\n0 1\n", None).unwrap();
        assert_eq!(a, set(2, &[&[0, 0], &[1, 0], &[0, 1]]));

        let b = parse_point_set("# comment\n\n2 3\n", None).unwrap();
        assert_eq!(b, set(2, &[&[2, 3]]));

        let c = parse_point_set("  -1   7  \n", None).unwrap();
        assert_eq!(c, set(2, &[&[-1, 7]]));
    }

    #[test]
    fn parse_errors() {
        let err = parse_point_set("1 2\n1 2\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_point_set("1 2\n3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_point_set("1 x\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = parse_point_set("# only a comment\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 0, .. }));

        let err = parse_point_set("1 2 3\n", Some(2)).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn parse_empty_with_declared_dimension() {
        let a = parse_point_set("", Some(3)).unwrap();
        assert!(a.is_empty());
        assert_eq!(a.dim(), 3);
        let b = parse_point_set("# nothing\n\n", Some(2)).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn serialize_sorting() {
        let a = set(2, &[&[0, 1], &[1, 0], &[0, 0]]);
        assert_eq!(serialize_point_set(&a), "0 0\n1 0\n0 1\n");

        assert_eq!(serialize_point_set(&PointSet::empty(2).unwrap()), "");
        assert_eq!(serialize_point_set(&set(2, &[&[2, -1]])), "2 -1\n");

        // Not inside X_2, so lexicographic.
        let mixed = set(2, &[&[2, -1], &[0, 5]]);
        assert_eq!(serialize_point_set(&mixed), "0 5\n2 -1\n");
    }

    #[test]
    fn round_trips() {
        let sets = [
            set(2, &[&[0, 0], &[1, 0], &[0, 1]]),
            set(2, &[&[2, -1], &[0, 5], &[-3, -3]]),
            set(3, &[&[0, 0, 0], &[2, 0, 1]]),
        ];
        for a in &sets {
            let text = serialize_point_set(a);
            assert_eq!(&parse_point_set(&text, None).unwrap(), a);
        }
        let text = "0 0\n1 0\n0 1\n";
        assert_eq!(
            serialize_point_set(&parse_point_set(text, None).unwrap()),
            text
        );
    }

    #[test]
    fn certificate_format() {
        let cert = g_exact(3, 7).unwrap();
        let text = serialize_certificate(&cert);
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "# method=initial-segment value=5 n=3 m=7 quantity=gap"
        );
        assert_eq!(lines.count(), 7);
        // The header is a comment, so the file parses as the witness.
        assert_eq!(parse_point_set(&text, None).unwrap(), cert.witness);

        let brute = min_gap_bruteforce(2, 3, &SearchOptions::default()).unwrap();
        let text = serialize_certificate(&brute);
        assert!(
            text.starts_with("# method=brute-force value=1 n=2 m=3 quantity=gap exhaustive=true\n")
        );
    }

    #[test]
    fn csv_format() {
        let rows = gap_table(3, 7, 7).unwrap();
        assert_eq!(
            table_to_csv(&rows),
            "n,m,g,bound,ratio\n3,7,5,4.58258,1.09109\n"
        );

        let rows = vec![evaluate_bound(3, 0).unwrap()];
        assert_eq!(table_to_csv(&rows), "n,m,g,bound,ratio\n3,0,0,0,\n");
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0, 6), "0");
        assert_eq!(fmt_sig(1.0, 6), "1.00000");
        assert_eq!(fmt_sig(58.50641, 6), "58.5064");
        assert_eq!(fmt_sig(123456.7, 6), "123457");
        assert_eq!(fmt_sig(0.5, 6), "0.500000");
        assert_eq!(pt(&[1, -2]).to_string(), "1 -2");
    }
}
