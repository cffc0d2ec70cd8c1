from latmin.main import run

run()
