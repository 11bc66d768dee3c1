//! Encodes Likert ratings, aggregates raters, and scores inter-rater
//! reliability with ICC(3,k).
//!
//! ```bash
//! cargo run --example rater_reliability
//! ```

use stclone::stats::{
    aggregate_ratings, group_summary, icc3k, likert_value, RatingSheet, ResponseVariable,
};

fn main() {
    println!("Likert scale mapped onto [-1, 1]:");
    for label in [
        "Strongly disagree",
        "Disagree",
        "Neither agree nor disagree",
        "Agree",
        "Strongly agree",
    ] {
        println!("  {:<28} -> {:+.1}", label, likert_value(label).unwrap().value);
    }

    // Eight clones rated by three raters on the relevance variable.
    let mut sheet = RatingSheet::new();
    let ratings: [(&str, [&str; 3]); 8] = [
        ("clone-01", ["Strongly agree", "Agree", "Strongly agree"]),
        ("clone-02", ["Disagree", "Strongly disagree", "Disagree"]),
        ("clone-03", ["Agree", "Agree", "Neither agree nor disagree"]),
        ("clone-04", ["Strongly agree", "Strongly agree", "Strongly agree"]),
        ("clone-05", ["Neither agree nor disagree", "Disagree", "Neither agree nor disagree"]),
        ("clone-06", ["Strongly disagree", "Strongly disagree", "Disagree"]),
        ("clone-07", ["Agree", "Strongly agree", "Agree"]),
        ("clone-08", ["Disagree", "Neither agree nor disagree", "Agree"]),
    ];
    for (clone, labels) in ratings {
        for (rater, label) in ["expert-a", "expert-b", "expert-c"].iter().zip(labels) {
            sheet.add_rating(clone, rater, ResponseVariable::Relevance, label).unwrap();
        }
    }

    println!("\nPer-clone means (averaged through all raters):");
    let means = aggregate_ratings(&sheet, ResponseVariable::Relevance).unwrap();
    for (clone, mean) in &means {
        println!("  {clone}: {mean:+.3}");
    }

    let values: Vec<f64> = means.iter().map(|(_, m)| *m).collect();
    let summary = group_summary(&values).unwrap();
    println!(
        "\nGroup summary: min {:+.2}  q1 {:+.2}  median {:+.2}  q3 {:+.2}  max {:+.2}  mean {:+.3}",
        summary.min, summary.q1, summary.median, summary.q3, summary.max, summary.mean
    );

    let matrix = sheet.matrix(ResponseVariable::Relevance).unwrap();
    let result = icc3k(&matrix, 0.05).unwrap();
    println!(
        "\nICC(3,k) = {:.3}  95% CI [{:.3}, {:.3}]  F({}, {}) = {:.3}  p = {:.2e}",
        result.icc,
        result.ci_lower,
        result.ci_upper,
        result.df1,
        result.df2,
        result.f_value,
        result.p_value
    );
    // Consistency ICC satisfies icc = 1 - 1/F.
    assert!((result.icc - (1.0 - 1.0 / result.f_value)).abs() < 1e-12);
}
