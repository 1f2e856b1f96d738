use lzdist::dataset::{
    load_jsonl, parse_jsonl, read_csv_records, write_csv_records, write_jsonl, EditRecord, Scenario,
};
use proptest::prelude::*;

fn scenario() -> impl Strategy<Value = Option<Scenario>> {
    prop_oneof![
        Just(None),
        Just(Some(Scenario::Normal)),
        Just(Some(Scenario::Similar)),
        Just(Some(Scenario::Fast)),
        Just(Some(Scenario::Human)),
    ]
}

fn record() -> impl Strategy<Value = EditRecord> {
    (
        "\\PC{0,40}",
        "\\PC{0,40}",
        proptest::option::of("\\PC{0,40}"),
        proptest::option::of(0.0f64..1e6),
        proptest::option::of(0u64..1_000_000),
        proptest::option::of("[A-Z][0-9]"),
        scenario(),
    )
        .prop_map(|(source, target, context, t, k, annotator, scenario)| {
            let mut r = EditRecord::new("", source, target);
            r.context = context;
            r.edit_time_s = t;
            r.keystrokes = k;
            r.annotator = annotator;
            r.scenario = scenario;
            r
        })
}

fn records() -> impl Strategy<Value = Vec<EditRecord>> {
    proptest::collection::vec(record(), 0..12).prop_map(|mut v| {
        for (i, r) in v.iter_mut().enumerate() {
            r.id = format!("rec-{i}");
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jsonl_round_trip(recs in records()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.jsonl");
        write_jsonl(&recs, &path).unwrap();
        let loaded = load_jsonl(&path).unwrap();
        prop_assert!(loaded.errors.is_empty());
        prop_assert_eq!(loaded.unknown_fields, 0);
        prop_assert_eq!(loaded.records, recs);
    }

    #[test]
    fn csv_round_trip(mut recs in records()) {
        // An empty CSV cell reads back as an absent value.
        for r in &mut recs {
            r.context = r.context.take().filter(|c| !c.is_empty());
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("data.csv");
        write_csv_records(&recs, &path).unwrap();
        prop_assert_eq!(read_csv_records(&path).unwrap(), recs);
    }

    #[test]
    fn loader_never_panics(text in "(\\PC|\n){0,300}") {
        if let Ok(loaded) = parse_jsonl(&text) {
            for e in &loaded.errors {
                prop_assert!(e.line >= 1);
            }
        }
    }
}

#[test]
fn non_ascii_bytes_survive() {
    let mut r = EditRecord::new("ü-1", "Ça coûte 10 €", "Das kostet 10 € 🙂");
    r.context = Some("中文 \u{301}e\r\n\ttab".into());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.jsonl");
    write_jsonl(std::slice::from_ref(&r), &path).unwrap();
    let raw = std::fs::read(&path).unwrap();
    assert!(raw.windows("€".len()).any(|w| w == "€".as_bytes()));
    assert_eq!(load_jsonl(&path).unwrap().records, vec![r]);
}

#[test]
fn stable_field_order() {
    let recs: Vec<EditRecord> = (0..3)
        .map(|i| {
            let mut r = EditRecord::new(format!("r{i}"), "s", "t");
            r.keystrokes = Some(i);
            r
        })
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.jsonl");
    write_jsonl(&recs, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], r#"{"id":"r0","source":"s","target":"t","keystrokes":0}"#);
}

#[test]
fn missing_file_names_the_path() {
    let err = load_jsonl("/definitely/not/here.jsonl").unwrap_err();
    assert!(err.to_string().contains("/definitely/not/here.jsonl"));
}
