use qcyclo_core::frobenius::frobenius_in_g;
use qcyclo_core::lfunc::corollary_report;
use qcyclo_core::FieldParams;

fn main() {
    for q in [3i64, 5, 7, 13] {
        let pr = FieldParams::new(-1, q).unwrap();
        let report = corollary_report(&pr, 2000).unwrap();
        let mut other = vec![];
        let mut expected_defect = 0;
        let mut flagged = 0;
        for row in &report {
            if row.agree {
                continue;
            }
            if row.flagged_subcase {
                flagged += 1;
                continue;
            }
            let in_second = if q % 4 == 3 && row.prime % 4 == 1 && row.prime as i64 != q {
                let (_, b) = frobenius_in_g(&pr, row.prime).unwrap();
                b % 4 == 0
            } else {
                false
            };
            if in_second {
                expected_defect += 1;
            } else {
                other.push(row.prime);
            }
        }
        println!("q={q}: flagged={flagged} second_defect={expected_defect} other={}", other.len());
        if !other.is_empty() {
            let pr2 = FieldParams::new(-1, q).unwrap();
            for &l in other.iter().take(3) {
                let (a, b) = frobenius_in_g(&pr2, l).unwrap();
                let row = report.iter().find(|r| r.prime == l).unwrap();
                println!("  l={l} (mod4={}, a={a}, b={b}): direct {:?} printed {:?}",
                    l % 4, row.direct, row.printed);
            }
        }
    }
}
