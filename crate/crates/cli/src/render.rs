//! CSV sampling of a refinement relation for plotting.

use std::io::Write;

use num_traits::ToPrimitive;
use refinemask::algebra::{int, ratio};
use refinemask::{poly_from_mask, Mask, Rational};

use crate::CliError;

/// Sampling grid for [`render_csv`].
#[derive(Clone, Debug)]
pub struct CsvOptions {
    pub t_min: Rational,
    pub t_max: Rational,
    /// Number of rows; a single sample is taken at `t_min`.
    pub samples: usize,
}

/// Writes `t,total,part_<j>,...` rows for the polynomial refined by `mask`.
///
/// `total` is `p(t)` and `part_j` is `2·m_j·p(2t - j)` for every stored
/// index `j` of the mask, in increasing order. Values are computed exactly
/// and rounded to 12 significant digits only when printed.
pub fn render_csv(mask: &Mask, options: &CsvOptions, out: impl Write) -> Result<(), CliError> {
    let p = poly_from_mask(mask)?;
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);

    let mut header = vec!["t".to_string(), "total".to_string()];
    header.extend(mask.iter().map(|(j, _)| format!("part_{j}")));
    writer.write_record(&header)?;

    let step = if options.samples > 1 {
        (&options.t_max - &options.t_min) / int(options.samples as i64 - 1)
    } else {
        ratio(0, 1)
    };
    for i in 0..options.samples {
        let t = &options.t_min + &step * int(i as i64);
        let mut record = vec![format_exact(&t), format_exact(&p.eval(&t))];
        for (j, mj) in mask.iter() {
            let part = int(2) * mj * p.eval(&(int(2) * &t - int(j)));
            record.push(format_exact(&part));
        }
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

fn format_exact(r: &Rational) -> String {
    format_significant(r.to_f64().unwrap_or(f64::NAN))
}

/// `x` rounded to 12 significant digits, like C's `%.12g`.
pub fn format_significant(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..DIGITS).contains(&exponent) {
        let decimals = (DIGITS - 1 - exponent).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(2.5), "2.5");
        assert_eq!(format_significant(1.0), "1");
        assert_eq!(format_significant(-0.75), "-0.75");
        assert_eq!(format_significant(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_significant(2.0 / 3.0 * 1000.0), "666.666666667");
        assert_eq!(format_significant(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_significant(1.5e-7), "1.5e-7");
        assert_eq!(format_significant(0.0), "0");
    }

    fn render(mask: &str, options: &CsvOptions) -> String {
        let mut buf = Vec::new();
        render_csv(&mask.parse().unwrap(), options, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn constant_polynomial() {
        let options = CsvOptions {
            t_min: int(0),
            t_max: int(3),
            samples: 7,
        };
        let text = render("0:1/16,3/16,3/16,1/16", &options);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t,total,part_0,part_1,part_2,part_3"));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(|r| r.split(',').nth(1) == Some("1")));
        assert_eq!(rows[1].split(',').next(), Some("0.5"));
    }

    #[test]
    fn quadratic_at_zero() {
        let options = CsvOptions {
            t_min: int(0),
            t_max: int(0),
            samples: 1,
        };
        let text = render("0:1/64,3/64,3/64,1/64", &options);
        assert_eq!(text.lines().nth(1).unwrap().split(',').nth(1), Some("2.5"));
    }
}
