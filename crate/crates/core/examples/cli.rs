// Driving the command line interface in-process.

pub fn run() -> satlab::Result<()> {
    let calls: [&[&str]; 4] = [
        &["satlab", "--deterministic", "construct", "--family", "petersen"],
        &["satlab", "--deterministic", "oracle", "--n", "6", "--h", "K3", "--f", "K4"],
        &["satlab", "--deterministic", "builder", "coverage", "--a", "11", "--b", "12", "--limit", "120"],
        &["satlab", "--deterministic", "bounds", "--case", "ehm", "--n", "12", "--s", "4"],
    ];
    for argv in calls {
        let argv: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = satlab::cli::run(&argv, &mut out, &mut err);
        println!("$ {}\n{}exit {code}", argv[1..].join(" "), String::from_utf8_lossy(&out));
        assert_eq!(code, satlab::cli::EXIT_OK, "{}", String::from_utf8_lossy(&err));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
