//! Final release criterion: the report subcommand regenerates every
//! classification row and no verdict may disagree.

use std::process::Command;

use anosov_core::doc::{from_json_str, ReportBundle};

#[test]
fn criterion_7_report_certifies_every_row() {
    let out = Command::new(env!("CARGO_BIN_EXE_anosov"))
        .args(["report", "--json"])
        .output()
        .expect("binary runs");
    assert_eq!(
        out.status.code(),
        Some(0),
        "report exits 0; stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    let bundle: ReportBundle =
        from_json_str(std::str::from_utf8(&out.stdout).expect("utf8 output")).expect("bundle parses");
    assert!(!bundle.rows.is_empty());
    let allowed = [
        "PASS",
        "OBSTRUCTED",
        "expected by theorem, not mechanized",
    ];
    for row in &bundle.rows {
        assert!(
            allowed.contains(&row.verdict.as_str()),
            "row {} has verdict '{}'",
            row.name,
            row.verdict
        );
        assert!(row.agrees, "row {} disagrees: {}", row.name, row.detail);
        match row.verdict.as_str() {
            "PASS" => assert!(
                row.certificate.is_some(),
                "row {} passed without a certificate",
                row.name
            ),
            "OBSTRUCTED" => assert!(
                !row.detail.is_empty(),
                "row {} is obstructed without a recorded criterion",
                row.name
            ),
            _ => {}
        }
    }
    assert!(bundle.all_agree());
    println!("criterion 7: PASS");
}
