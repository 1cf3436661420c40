import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from src.core.config import AppConfig
from src.core.database import ResultStore


class TestAppConfig(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.app_dir = Path(self.temp_dir.name) / "home"

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_defaults(self):
        config = AppConfig(app_dir=self.app_dir)
        self.assertEqual(config.get("naive_cap"), 8)
        self.assertEqual(config.get("brute_force_cap"), 10)
        self.assertEqual(config.get("default_format"), "text")
        self.assertFalse(config.get("use_cache"))
        self.assertEqual(config.db_file, self.app_dir / "results.db")
        self.assertFalse(self.app_dir.exists())

    def test_save_and_load(self):
        config = AppConfig(app_dir=self.app_dir)
        config.set("naive_cap", 6)
        config.set("theme", "light")
        config.save()
        self.assertTrue((self.app_dir / "config.json").exists())

        reloaded = AppConfig(app_dir=self.app_dir)
        self.assertEqual(reloaded.get("naive_cap"), 6)
        self.assertEqual(reloaded.get("theme"), "light")
        self.assertEqual(reloaded.get("threads"), 1)

    def test_alternate_config_file(self):
        path = Path(self.temp_dir.name) / "elsewhere" / "pf.json"
        config = AppConfig(app_dir=self.app_dir, config_file=path)
        config.set("table_max_n", 5)
        config.save()
        self.assertTrue(path.exists())
        self.assertEqual(AppConfig(app_dir=self.app_dir, config_file=path).get("table_max_n"), 5)

    def test_corrupt_file_falls_back_to_defaults(self):
        self.app_dir.mkdir(parents=True)
        (self.app_dir / "config.json").write_text("{not json", encoding="utf-8")
        self.assertEqual(AppConfig(app_dir=self.app_dir).get("naive_cap"), 8)

    def test_home_from_environment(self):
        with mock.patch.dict(os.environ, {"PFAVOID_HOME": str(self.app_dir)}):
            config = AppConfig()
        self.assertEqual(config.app_dir, self.app_dir)

    def test_bfile_dir_precedence(self):
        config = AppConfig(app_dir=self.app_dir)
        config.set("bfile_dir", "/from/config")
        with mock.patch.dict(os.environ, {"PFAVOID_BFILE_DIR": "/from/env"}):
            self.assertEqual(config.resolve_bfile_dir("/from/flag"), Path("/from/flag"))
            self.assertEqual(config.resolve_bfile_dir(), Path("/from/env"))
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(config.resolve_bfile_dir(), Path("/from/config"))
            config.set("bfile_dir", None)
            self.assertIsNone(config.resolve_bfile_dir())


class TestResultStore(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.store = ResultStore(Path(self.temp_dir.name) / "cache" / "results.db")

    def tearDown(self):
        self.store.close()
        self.temp_dir.cleanup()

    def test_missing_count(self):
        self.assertIsNone(self.store.get_count("123", 4, "naive"))

    def test_put_and_replace(self):
        self.store.put_count("231,321", 6, "naive", 1428)
        self.assertEqual(self.store.get_count("231,321", 6, "naive"), 1428)
        self.assertIsNone(self.store.get_count("231,321", 6, "permsum"))
        self.store.put_count("231,321", 6, "naive", 1429)
        self.assertEqual(self.store.get_count("231,321", 6, "naive"), 1429)
        rows = self.store.query_all("SELECT * FROM counts")
        self.assertEqual(len(rows), 1)

    def test_big_values(self):
        big = 3 ** 200
        self.store.put_count("321", 40, "formula", big)
        self.assertEqual(self.store.get_count("321", 40, "formula"), big)

    def test_reopen(self):
        path = self.store.db_path
        self.store.put_count("12", 3, "formula", 1)
        self.store.close()
        self.store = ResultStore(path)
        self.assertEqual(self.store.get_count("12", 3, "formula"), 1)


if __name__ == '__main__':
    unittest.main()
