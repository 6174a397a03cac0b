use std::path::PathBuf;

use pcakit::{read_csv_auto, run};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn pcakit(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pcakit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn stats_prints_listing_values() {
    let (code, out, err) = pcakit(&["--precision", "14", "stats", &data("x1.csv")]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("Std dev: 8.32666399786453\n"), "{out}");
    assert!(out.contains("Mean: 10.00000000000000\n"));

    let (_, out, _) = pcakit(&["stats", &data("hours_marks.csv"), "--precision", "2"]);
    assert!(out.contains("Sum: 167.00 749.00\n"), "{out}");
    assert!(out.contains("Mean: 13.92 62.42\n"), "{out}");
}

#[test]
fn cov_matches_listing() {
    let (code, out, _) = pcakit(&["--precision", "2", "cov", &data("hours_marks.csv")]);
    assert_eq!(code, 0);
    assert_eq!(out, "Covariance matrix:\n+47.72 +122.95\n+122.95 +370.08\n");
}

#[test]
fn eig_reports_sorted_eigenvalues() {
    let (code, out, _) = pcakit(&["--precision", "3", "eig", &data("m.csv")]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("Eigenvalues:\n+8.000 -1.000 -1.000\n"),
        "{out}"
    );
    assert!(out.contains("Reconstruction residual:"));
}

#[test]
fn eig_rejects_non_symmetric_input() {
    let (code, out, err) = pcakit(&["eig", &data("nonsym.csv")]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not symmetric"), "{err}");
}

#[test]
fn svd_on_centered_xy10() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adj.csv");
    std::fs::write(
        &path,
        "0.69,0.49\n-1.31,-1.21\n0.39,0.99\n0.09,0.29\n1.29,1.09\n0.49,0.79\n0.19,-0.31\n-0.81,-0.81\n-0.31,-0.31\n-0.71,-1.01\n",
    )
    .unwrap();
    let (code, out, _) = pcakit(&["svd", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("Singular values:\n+3.3994483978 +0.6646432054\n"),
        "{out}"
    );
}

#[test]
fn pca_fit_prints_eigenvalues_and_writes_model() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("xy10.model");
    let (code, out, _) = pcakit(&[
        "pca-fit",
        &data("xy10.csv"),
        "--method",
        "center",
        "--model-out",
        model.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("+1.2840277122 +0.0490833989"), "{out}");
    let text = std::fs::read_to_string(&model).unwrap();
    assert!(text.starts_with("pcakit-model v1\n"));
}

#[test]
fn fit_routes_print_identical_eigenvalues() {
    for file in ["xy10.csv", "hours_marks.csv", "x1_x2.csv"] {
        let eigen_line = |algo: &str| {
            let (code, out, _) = pcakit(&["pca-fit", &data(file), "--algo", algo]);
            assert_eq!(code, 0);
            out.lines()
                .skip_while(|l| *l != "Eigenvalues:")
                .nth(1)
                .unwrap()
                .to_string()
        };
        assert_eq!(eigen_line("svd"), eigen_line("cov"), "{file}");
    }
}

#[test]
fn standardize_constant_column_is_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("const.csv");
    std::fs::write(&path, "a,b\n1,5\n2,5\n3,5\n").unwrap();
    let (code, _, err) = pcakit(&["pca-fit", path.to_str().unwrap(), "--method", "standardize"]);
    assert_eq!(code, 2);
    assert!(err.contains("zero standard deviation"));
}

#[test]
fn transform_writes_round_trippable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.model");
    let out_csv = dir.path().join("t.csv");
    assert_eq!(
        pcakit(&[
            "pca-fit",
            &data("hours_marks.csv"),
            "--model-out",
            model.to_str().unwrap()
        ])
        .0,
        0
    );
    let (code, stdout, _) = pcakit(&[
        "pca-transform",
        &data("hours_marks.csv"),
        "--model",
        model.to_str().unwrap(),
        "--out",
        out_csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("Transformed Data\n"));

    let written = read_csv_auto(&std::fs::read_to_string(&out_csv).unwrap()).unwrap();
    assert_eq!(written.column_names, Some(vec!["pc1".into(), "pc2".into()]));

    let original =
        read_csv_auto(&std::fs::read_to_string(data("hours_marks.csv")).unwrap()).unwrap();
    let fitted = pcakit_core::pca::read_model(&std::fs::read_to_string(&model).unwrap()).unwrap();
    let expected = fitted.transform(&original.matrix, None).unwrap();
    for (a, b) in written.matrix.as_slice().iter().zip(expected.as_slice()) {
        assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
    }
}

#[test]
fn transform_error_paths() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.model");
    pcakit(&[
        "pca-fit",
        &data("xy10.csv"),
        "--model-out",
        model.to_str().unwrap(),
    ]);
    let m = model.to_str().unwrap();

    let (code, _, err) = pcakit(&[
        "pca-transform",
        &data("xy10.csv"),
        "--model",
        m,
        "--components",
        "3",
    ]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = pcakit(&["pca-transform", &data("m.csv"), "--model", m]);
    assert_eq!(code, 2);
    let (code, _, _) = pcakit(&[
        "pca-transform",
        &data("xy10.csv"),
        "--model",
        "/nonexistent/model",
    ]);
    assert_eq!(code, 2);

    std::fs::write(&model, "not a model\n").unwrap();
    let (code, _, err) = pcakit(&["pca-transform", &data("xy10.csv"), "--model", m]);
    assert_eq!(code, 2);
    assert!(err.contains("model file line 1"), "{err}");
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p.svg");
    let (code, _, _) = pcakit(&[
        "plot",
        &data("hours_marks.csv"),
        "--out",
        svg.to_str().unwrap(),
        "--title",
        "Hours vs marks",
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 12);
    assert!(text.contains("Hours vs marks"));
    assert!(text.contains(">hours</text>") && text.contains(">marks</text>"));

    let (code, _, err) = pcakit(&["plot", &data("x1.csv"), "--out", svg.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("two columns"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(pcakit(&[]).0, 1);
    assert_eq!(pcakit(&["frobnicate"]).0, 1);
    assert_eq!(
        pcakit(&["pca-fit", &data("xy10.csv"), "--method", "sideways"]).0,
        1
    );
    assert_eq!(pcakit(&["pca-transform", &data("xy10.csv")]).0, 1);
    let (code, out, _) = pcakit(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("pca-transform"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "a,b\n1,oops\n").unwrap();
    let (code, _, err) = pcakit(&["stats", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("row 1, column 2"), "{err}");

    std::fs::write(&bad, "1,2\n3\n").unwrap();
    assert_eq!(pcakit(&["cov", bad.to_str().unwrap()]).0, 2);
    assert_eq!(pcakit(&["cov", "/does/not/exist.csv"]).0, 2);
}
