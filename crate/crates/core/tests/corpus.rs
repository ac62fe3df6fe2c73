use gchar::catalog::CORPUS;
use gchar::corpus::verify_corpus;
use gchar::par::Exec;

#[test]
fn full_corpus_has_no_failures() {
    let r = verify_corpus(CORPUS, Exec::from_jobs(None), 0x5eed, None);
    for line in r.failure_lines() {
        eprintln!("{line}");
    }
    assert!(r.pair_count() >= 30, "only {} pairs", r.pair_count());
    assert!(r.passed());
}
