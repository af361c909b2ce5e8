from typing import Dict
from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.asymptotics.data.asymptotics_data import AsymptoticsData
from modules.asymptotics.data.factories.asymptotics_data_factory import AsymptoticsDataFactory
from modules.asymptotics.managers.expectation_manager import ExpectationManager
from modules.asymptotics.managers.factories.expectation_manager_factory import ExpectationManagerFactory
from modules.asymptotics.managers.factories.singularity_manager_factory import SingularityManagerFactory
from modules.asymptotics.managers.singularity_manager import SingularityManager


class AsymptoticsConfig:

    @classmethod
    def get(cls) -> Dict[str, FactoryInterface]:
        return {
            SingularityManager.__name__: SingularityManagerFactory(),
            ExpectationManager.__name__: ExpectationManagerFactory(),
            AsymptoticsData.__name__: AsymptoticsDataFactory()
        }
