use jacsyz_core::analysis::{analyze, AnalysisOptions};
use jacsyz_core::corpus::{corpus, CurveRecord};
use jacsyz_core::parse::parse_poly;
use jacsyz_core::report::Report;
use rayon::prelude::*;

fn run(rec: &CurveRecord) -> Result<Report, String> {
    let f = parse_poly(&rec.f_text).map_err(|e| e.to_string())?;
    let a = analyze(&rec.name, f, rec.meta.clone(), &AnalysisOptions::default())
        .map_err(|e| e.to_string())?;
    Ok(Report::from_analysis(&a))
}

#[test]
fn corpus_is_large_enough_and_sorted() {
    let c = corpus();
    assert!(c.len() >= 20);
    assert!(c.windows(2).all(|w| w[0].name < w[1].name));
}

#[test]
fn golden_corpus() {
    let records: Vec<CurveRecord> = corpus().into_iter().filter(|r| !r.slow).collect();
    let problems: Vec<String> = records
        .par_iter()
        .flat_map_iter(|rec| {
            let mut out = Vec::new();
            match run(rec) {
                Err(e) => out.push(format!("{}: {e}", rec.name)),
                Ok(report) => {
                    if let Some(exp) = &rec.expected {
                        for m in exp.mismatches(&report) {
                            out.push(format!("{}: {m}", rec.name));
                        }
                    }
                    for c in report.audit_failures() {
                        out.push(format!("{}: {} failed: {}", rec.name, c.id, c.details));
                    }
                }
            }
            out
        })
        .collect();
    assert!(problems.is_empty(), "\n{}", problems.join("\n"));
}

#[test]
fn degree_twelve_curve() {
    let rec = corpus().into_iter().find(|r| r.slow).expect("slow curve present");
    let f = parse_poly(&rec.f_text).unwrap();
    let a = analyze(&rec.name, f, rec.meta.clone(), &AnalysisOptions::default()).unwrap();
    assert_eq!(a.exponents(), &[6, 7, 8, 10]);
    let b = a.bourbaki.as_ref().unwrap();
    let z = parse_poly("z").unwrap();
    // g_2 and g_3 share the line z = 0, only the quintic g_4 removes it
    assert!(b.data.generators[0].div_exact(&z).is_some());
    assert!(b.data.generators[1].div_exact(&z).is_some());
    assert!(b.data.generators[2].div_exact(&z).is_none());
    assert_eq!(b.data.gen_degrees, vec![2, 3, 5]);
    assert_eq!(b.d_prime.as_ref().unwrap().d_prime, 10);
    let report = Report::from_analysis(&a);
    assert!(rec.expected.unwrap().mismatches(&report).is_empty());
    assert!(report.audit_failures().next().is_none());
}
