from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.asymptotics.managers.expectation_manager import ExpectationManager
from modules.order.managers.distribution_manager import DistributionManager


class ExpectationManagerFactory(FactoryInterface):
    """ Factory for creating expectation manager object
    """
    def invoke(self, service_manager):
        return ExpectationManager(
            distribution_manager=service_manager.get(DistributionManager.__name__)
        )
