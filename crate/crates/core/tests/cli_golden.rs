use ariki_koike::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ariki-koike").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn machine(args: &[&str]) -> String {
    let mut full = args.to_vec();
    full.extend(["--format", "machine"]);
    let (code, out, err) = invoke(&full);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

#[test]
fn classify_m2() {
    assert_eq!(
        machine(&["classify", "--m", "2", "--n", "2", "--scheme", "e=0;class=0,0;shift=0,1"]),
        "record=regime kind=almost_semisimple m=2 n=2 scheme=e=0;class=0,0;shift=0,1 irreps=5 simple_count=4 \
         non_simple=[(2),()] witness=(1,2,+1) non_kleshchev=[(2),()] r=- dim_L_chi=-\n"
    );
}

#[test]
fn classify_kappa_m1() {
    assert_eq!(
        machine(&["classify", "--n", "2", "--kappa", "m=1;n=2;kappa00=1/2"]),
        "record=regime kind=almost_semisimple m=1 n=2 scheme=e=2;class=0;shift=0 irreps=2 simple_count=1 \
         non_simple=[(2)] witness=- non_kleshchev=[(2)] r=1 dim_L_chi=1\n"
    );
}

#[test]
fn classify_generic() {
    assert_eq!(
        machine(&["classify", "--m", "3", "--n", "2"]),
        "record=regime kind=semisimple m=3 n=2 scheme=e=0;class=0,1,2;shift=0,0,0 irreps=9 simple_count=9 \
         non_simple=- witness=- non_kleshchev=- r=- dim_L_chi=-\n"
    );
}

#[test]
fn count_simples_q_one() {
    assert_eq!(
        machine(&[
            "count-simples",
            "--n",
            "2",
            "--scheme",
            "e=1;class=0,0;shift=0,0"
        ]),
        "record=simples m=2 n=2 scheme=e=1;class=0,0;shift=0,0 irreps=5 simple_count=2 \
         non_simple=[(2),()];[(1,1),()];[(1),(1)]\n"
    );
}

#[test]
fn blocks_m3_exceptional() {
    let out = machine(&[
        "blocks",
        "--m",
        "3",
        "--n",
        "3",
        "--scheme",
        "e=0;class=0,1,1;shift=0,2,0",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(
        lines[0],
        "record=blocks m=3 n=3 scheme=e=0;class=0,1,1;shift=0,2,0 count=19 exceptional=14"
    );
    assert_eq!(
        lines[15],
        "record=block index=14 size=4 content={(1,0),(1,1),(1,2)} \
         members=[(),(1,1,1),()];[(),(1,1),(1)];[(),(1),(2)];[(),(),(3)]"
    );
}

#[test]
fn blocks_m2() {
    assert_eq!(
        machine(&["blocks", "--n", "2", "--scheme", "e=0;class=0,0;shift=0,1"]),
        "record=blocks m=2 n=2 scheme=e=0;class=0,0;shift=0,1 count=3 exceptional=0\n\
         record=block index=0 size=3 content={(0,0),(0,1)} members=[(2),()];[(1),(1)];[(),(1,1)]\n\
         record=block index=1 size=1 content={(0,-1),(0,0)} members=[(1,1),()]\n\
         record=block index=2 size=1 content={(0,1),(0,2)} members=[(),(2)]\n"
    );
}

#[test]
fn block_structure_m2() {
    let out = machine(&[
        "block-structure",
        "--n",
        "2",
        "--scheme",
        "e=0;class=0,0;shift=0,1",
    ]);
    assert_eq!(
        out.lines().nth(1).unwrap(),
        "record=block_structure rank=2 specht_order=[(),(1,1)];[(1),(1)];[(2),()] \
         simple_order=[(),(1,1)];[(1),(1)] decomposition=1,0;1,1;0,1 cartan=2,1;1,2 det_cartan=3 \
         hom_dims=2,1;1,2 kz_dims=1,1 pkz_multiplicities=1,1 exterior_dims=1,2,1"
    );
}

#[test]
fn bn_algebra_n2() {
    assert_eq!(
        machine(&["bn-algebra", "--n", "2"]),
        "record=bn n=2 dim=6 basis=e_1,e_2,xi_1,xi_2,f_1_2,f_2_1 associative=true radical_cube_zero=true\n\
         record=product left=e_1 right=e_1 result=e_1\n\
         record=product left=e_1 right=xi_1 result=xi_1\n\
         record=product left=e_1 right=f_2_1 result=f_2_1\n\
         record=product left=e_2 right=e_2 result=e_2\n\
         record=product left=e_2 right=xi_2 result=xi_2\n\
         record=product left=e_2 right=f_1_2 result=f_1_2\n\
         record=product left=xi_1 right=e_1 result=xi_1\n\
         record=product left=xi_2 right=e_2 result=xi_2\n\
         record=product left=f_1_2 right=e_1 result=f_1_2\n\
         record=product left=f_1_2 right=f_2_1 result=xi_2\n\
         record=product left=f_2_1 right=e_2 result=f_2_1\n\
         record=product left=f_2_1 right=f_1_2 result=xi_1\n"
    );
}

#[test]
fn audit_m3() {
    assert_eq!(
        machine(&["audit", "--n", "3", "--scheme", "e=0;class=0,1,1;shift=0,2,0"]),
        "record=audit m=3 n=3 scheme=e=0;class=0,1,1;shift=0,2,0 total=162 expected=162 passed=true\n"
    );
}

#[test]
fn sweep_small_grid() {
    let out = machine(&["sweep", "--grid", "m=2;n=2;e=0..5;shift=5"]);
    assert_eq!(
        out.lines().last().unwrap(),
        "record=summary points=26 disagreements=0 condition_exceptions=0 ariki_exceptions=0"
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "blocks",
        "--n",
        "3",
        "--scheme",
        "e=5;class=0,0,1;shift=0,2,3",
    ];
    assert_eq!(machine(&args), machine(&args));
}

#[test]
fn exit_codes() {
    let (code, _, err) = invoke(&["blocks", "--n", "2", "--scheme", "e=1;class=0,0;shift=0,0"]);
    assert_eq!((code, err.as_str()), (1, "error: q=1 blocks unsupported\n"));

    let (code, _, err) = invoke(&[
        "classify",
        "--n",
        "2",
        "--scheme",
        "e=0;class=0,x;shift=0,1",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("position 12"), "{err}");

    let (code, _, _) = invoke(&["block-structure", "--n", "2", "--m", "2"]);
    assert_eq!(code, 1);

    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 1);

    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("count-simples"));

    // the m = 1 points at e = n − 1 fall outside the stated characterisation
    let (code, out, _) = invoke(&["sweep", "--grid", "m=1;n=3;e=2", "--format", "machine"]);
    assert_eq!(code, 2);
    assert!(
        out.ends_with("condition_exceptions=1 ariki_exceptions=0\n"),
        "{out}"
    );
}

#[test]
fn table_format_aligns_keys() {
    let (code, out, _) = invoke(&["audit", "--n", "2", "--scheme", "e=0;class=0,0;shift=0,1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("record    audit\nm         2\n"), "{out}");
}
