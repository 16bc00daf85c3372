fn main() -> std::process::ExitCode {
    // restore default SIGPIPE so `liesym list catalog | head` exits quietly
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    liesym::harness::cli::main()
}
