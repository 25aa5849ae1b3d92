use lambda_partitions::cli::run;
use lambda_partitions::enumerate::{distinct, lambda_partitions, marked};
use lambda_partitions::text::{
    format_marked, format_partition, marked_from_json, marked_to_json, parse_marked,
    parse_partition, partition_from_json, partition_to_json,
};
use lambda_partitions::Lambda;
use proptest::prelude::*;

fn lampart(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("lampart").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok_lines(args: &[&str]) -> Vec<String> {
    let (code, out, err) = lampart(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.lines().map(str::to_string).collect()
}

#[test]
fn bijection_examples() {
    assert_eq!(
        ok_lines(&["bijection", "t", "--lambda", "2", "--input", "1,2,4,5,6,8"]),
        ["2,4,7*,13*"]
    );
    assert_eq!(
        ok_lines(&["bijection", "s", "--input", "2,3,5,6,8,9"]),
        ["2,6*,11*,14"]
    );
    assert_eq!(
        ok_lines(&["bijection", "s-inv", "--input", "2,6*,11*,14"]),
        ["2,3,5,6,8,9"]
    );
    assert_eq!(
        ok_lines(&["bijection", "t-inv", "--lambda", "3", "--input", "1,5*"]),
        ["1,2,3"]
    );
    assert_eq!(
        ok_lines(&["bijection", "t", "--lambda", "3", "--input", "3,2,1"]),
        ["1,5*"]
    );
    assert_eq!(
        ok_lines(&["bijection", "glaisher", "--input", "2,3"]),
        ["3,1,1"]
    );
    assert_eq!(
        ok_lines(&["bijection", "sylvester", "--input", "7"]),
        ["3,4"]
    );
    assert_eq!(
        ok_lines(&["bijection", "s", "--input", "1,2,3", "--format", "json"]),
        [r#"{"lambda":3,"parts":[1,5],"marked":[5]}"#]
    );
}

#[test]
fn traces_end_at_the_result() {
    let trace = ok_lines(&[
        "bijection",
        "t",
        "--lambda",
        "2",
        "--input",
        "1,2,4,5,6,8",
        "--trace",
    ]);
    assert_eq!(trace.len(), 6);
    assert_eq!(trace[0], "1,2,4,5,6,8");
    assert_eq!(trace[5], "2,4,7*,13*");
    let back = ok_lines(&[
        "bijection",
        "t-inv",
        "--lambda",
        "2",
        "--input",
        "2,4,7*,13*",
        "--trace",
    ]);
    assert_eq!(back, ["2,4,7*,13*", "1,2,4,6,13*", "1,2,4,5,6,8"]);
    let fixed = ok_lines(&[
        "bijection",
        "t",
        "--lambda",
        "3",
        "--input",
        "1,5",
        "--trace",
    ]);
    assert_eq!(fixed, ["1,5"]);
}

#[test]
fn enumerate_outputs() {
    assert_eq!(
        ok_lines(&["enumerate", "--n", "1", "--kind", "distinct"]),
        ["1"]
    );
    assert_eq!(
        ok_lines(&["enumerate", "--n", "6"]),
        ["6", "1,5", "2,4", "1,2,3"]
    );
    assert_eq!(
        ok_lines(&[
            "enumerate",
            "--n",
            "6",
            "--kind",
            "marked",
            "--lambda",
            "3",
            "--length",
            "2"
        ]),
        ["6*", "1,5"]
    );
    assert_eq!(
        ok_lines(&[
            "enumerate",
            "--n",
            "5",
            "--kind",
            "lambda",
            "--lambda",
            "3",
            "--index",
            "0"
        ]),
        ["1,4"]
    );
    assert_eq!(
        ok_lines(&[
            "enumerate",
            "--n",
            "3",
            "--kind",
            "distinct",
            "--format",
            "json"
        ]),
        [r#"{"parts":[3]}"#, r#"{"parts":[1,2]}"#]
    );
}

#[test]
fn verify_commands() {
    let lines = ok_lines(&["verify", "theorem", "--lambda", "2", "--max-n", "12"]);
    assert_eq!(lines.last().unwrap(), "OK n≤12");
    assert!(lines.contains(&"lambda=2 n=6 m=2 |D|=2 |N|=2".to_string()));
    let lines = ok_lines(&["verify", "theorem", "--max-n", "15"]);
    assert_eq!(lines.last().unwrap(), "OK n≤15");
    assert!(lines.contains(&"lambda=3 n=0 m=0 |D|=1 |N|=1".to_string()));

    let lines = ok_lines(&[
        "verify",
        "series",
        "--identity",
        "odd-product",
        "--max-degree",
        "30",
    ]);
    assert_eq!(
        lines[0],
        r#"{"identity":"odd-product","N":30,"ok":true,"first_mismatch":null}"#
    );
    assert_eq!(lines[1], "OK n≤30");

    let lines = ok_lines(&["verify", "fe", "--max-n", "4"]);
    assert_eq!(
        lines,
        ["n=1 0", "n=2 0", "n=3 t + t^2", "n=4 4t + 4t^2", "OK n≤4"]
    );
}

#[test]
fn table_command() {
    let lines = ok_lines(&["table", "--from", "9", "--to", "10", "--factorial-form"]);
    assert_eq!(
        lines,
        ["n,d,nu_a,nu_b,nu_ab", "9,8,12,6,8!", "10,10,4,8,10!/2"]
    );
    let lines = ok_lines(&["table", "--from", "10", "--to", "10", "--format", "json"]);
    assert_eq!(
        lines,
        [r#"[{"d":10,"n":10,"nu_a":"4","nu_ab":"1814400","nu_b":"8"}]"#]
    );
}

#[test]
fn bad_input_is_a_usage_error() {
    let (code, _, err) = lampart(&["bijection", "t", "--lambda", "2", "--input", "1,x"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot parse"), "{err}");
    let (code, _, err) = lampart(&["bijection", "s-inv", "--input", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("differ by less than 3"), "{err}");
    let (code, _, _) = lampart(&["bijection", "sylvester", "--input", "2,1"]);
    assert_eq!(code, 2);
    let (code, _, _) = lampart(&["verify", "series", "--identity", "nope"]);
    assert_eq!(code, 2);
}

proptest! {
    #[test]
    fn printed_objects_round_trip(n in 0u32..=30, pick in any::<prop::sample::Index>(), lambda3 in any::<bool>()) {
        let lambda = if lambda3 { Lambda::Three } else { Lambda::Two };
        let plain = distinct(n, None);
        let p = &plain[pick.index(plain.len())];
        prop_assert_eq!(&parse_partition(&format_partition(p)).unwrap(), p);
        prop_assert_eq!(&partition_from_json(&partition_to_json(p)).unwrap(), p);

        let lam = lambda_partitions(lambda, n, None);
        if !lam.is_empty() {
            let q = &lam[pick.index(lam.len())];
            prop_assert_eq!(&parse_partition(&format_partition(q)).unwrap(), q);
        }

        let marks = marked(lambda, n, None);
        let mp = &marks[pick.index(marks.len())];
        prop_assert_eq!(&parse_marked(lambda, &format_marked(mp)).unwrap(), mp);
        prop_assert_eq!(&marked_from_json(&marked_to_json(mp)).unwrap(), mp);
    }
}
