use hypersurface_link::cli::run_batch;
use hypersurface_link::registry::Registry;

fn main() -> hypersurface_link::Result<()> {
    let dir = std::env::temp_dir().join("hslink-batch-example");
    std::fs::create_dir_all(&dir)?;
    let input = dir.join("in.jsonl");
    std::fs::write(
        &input,
        concat!(
            r#"{"weights":[9,15,17,20],"degree":60,"poly":"z0^5*z1 + z0*z2^3 + z1^4 + z3^3"}"#, "\n",
            "not json\n",
            r#"{"weights":[1,1,1,1],"degree":2,"poly":"z0^2 + z1^2 + z2^2 + z3^2"}"#, "\n",
        ),
    )?;
    let mut out = Vec::new();
    let summary = run_batch(&input, &Registry::builtin(), &mut out, &mut std::io::stderr())?;
    for line in String::from_utf8_lossy(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        println!("{} -> {}", v["input"]["polynomial"], v["classification"]["diffeomorphism_type"]);
    }
    println!("{summary:?}");
    Ok(())
}
