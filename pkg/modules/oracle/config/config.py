from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.oracle.managers.cross_check_manager import CrossCheckManager
from modules.oracle.managers.factories.cross_check_manager_factory import CrossCheckManagerFactory
from modules.oracle.managers.factories.oracle_manager_factory import OracleManagerFactory
from modules.oracle.managers.oracle_manager import OracleManager


class OracleConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            OracleManager.__name__: OracleManagerFactory(),
            CrossCheckManager.__name__: CrossCheckManagerFactory()
        }
