use std::fs;
use std::process::{Command, Output};

fn dcensus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcensus"))
        .args(args)
        .output()
        .expect("run dcensus")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_catalog(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("dcensus-{}-{name}.txt", std::process::id()));
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn census_a5() {
    let o = dcensus(&["census", "A5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("order 60, D = 4"));
    assert_eq!(lines.count(), 5); // header + four classes
}

#[test]
fn census_accepts_recipes_and_files() {
    let o = dcensus(&["census", "frobenius_metacyclic", "p=7", "n=1", "q=3", "m=1"]);
    assert!(stdout(&o).starts_with("order 21, D = 1\n"));
    let o = dcensus(&["census", "direct_product a=C2 b=S3"]);
    assert!(stdout(&o).starts_with("order 12, D = 7\n"));
    let path = temp_catalog("file", "group S3 degree 3\ngen (1 2)\ngen (1 2 3)\n");
    let o = dcensus(&["census", "--file", &path, "--name", "S3"]);
    assert!(stdout(&o).starts_with("order 6, D = 1\n"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(dcensus(&["census", "Nope"]).status.code(), Some(2));
    assert_eq!(dcensus(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dcensus(&["verify", "--checks", "bogus"]).status.code(), Some(2));
    let path = temp_catalog("bad", "group A degree 2\ngen (1 5)\n");
    let o = dcensus(&["verify", "--catalog", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert!(o.stdout.is_empty());
    assert_eq!(dcensus(&["--max-order", "50", "census", "A5"]).status.code(), Some(2));
}

#[test]
fn verify_exit_code_follows_failures() {
    let good = temp_catalog("good", "group C4 recipe cyclic n=4\nexpect d=1\n");
    let o = dcensus(&["verify", "--catalog", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("check_id,instance,expected,computed,status\n"));
    let bad = temp_catalog("wrong", "group C4 recipe cyclic n=4\nexpect d=2\n");
    let o = dcensus(&["verify", "--catalog", &bad, "--checks", "expectations", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"failed\": 1"));
}

#[test]
fn family_frob2_agrees() {
    let o = dcensus(&["family", "frob2", "--grid", "p=5..13,q=2..5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(rows.len() >= 10, "{out}");
    assert!(rows.iter().all(|r| r.ends_with(",true")));
}

#[test]
fn table_of_a_file_catalog() {
    let path = temp_catalog("table", "group C6 recipe cyclic n=6\n\ngroup Q8 recipe preset name=Q8\n");
    let o = dcensus(&["table", "--catalog", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "name,order,d,subgroup_classes,subgroups,abelian,nilpotency_class,derived_length,center_order,bucket,error\n\
         C6,6,2,4,4,true,1,1,6,D2-2,\n\
         Q8,8,4,6,6,false,2,2,2,not-covered,\n"
    );
}
