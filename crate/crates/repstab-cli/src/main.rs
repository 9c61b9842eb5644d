use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = {
        let mut stdout = std::io::stdout().lock();
        let mut stderr = std::io::stderr().lock();
        let code = repstab_cli::run(&args, &mut stdout, &mut stderr);
        let _ = stdout.flush();
        let _ = stderr.flush();
        code
    };
    std::process::exit(code);
}
