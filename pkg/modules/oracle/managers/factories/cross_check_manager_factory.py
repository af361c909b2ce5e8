from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.oracle.managers.cross_check_manager import CrossCheckManager
from modules.oracle.managers.oracle_manager import OracleManager
from modules.order.managers.distribution_manager import DistributionManager
from modules.order.managers.spectrum_manager import SpectrumManager
from modules.series.managers.solver_manager import SolverManager
from modules.structure.managers.order_manager import OrderManager


class CrossCheckManagerFactory(FactoryInterface):
    """ Factory for creating cross check manager object
    """
    def invoke(self, service_manager):
        return CrossCheckManager(
            oracle_manager=service_manager.get(OracleManager.__name__),
            order_manager=service_manager.get(OrderManager.__name__),
            solver_manager=service_manager.get(SolverManager.__name__),
            spectrum_manager=service_manager.get(SpectrumManager.__name__),
            distribution_manager=service_manager.get(DistributionManager.__name__)
        )
