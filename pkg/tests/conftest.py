def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when != "call":
        return
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    tail = report.nodeid.split("::test_criterion_")[1]
    num, _, slug = tail.partition("_")
    slug = slug.split("[")[0].replace("_", " ")
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\ncriterion {int(num)} ({slug}): {outcome}")
