import os
import unittest
from sk88_service_locator.modules.service.managers.service_manager import ServiceManager
from modules.util.objects.settings import Settings
from service_locator import get_service_manager
from tests.integration.setup.factories.settings_factory_test import SettingsFactoryTest

SLOW_TESTS = os.environ.get("SATURNA_SLOW_TESTS") == "1"


class IntegrationSetup(unittest.TestCase):
    service_locator: ServiceManager = None

    @classmethod
    def setUpClass(cls) -> None:
        cls.service_locator = get_service_manager()

        settings_factory = SettingsFactoryTest()
        cls.service_locator.add({
            Settings.__name__: settings_factory
        })
