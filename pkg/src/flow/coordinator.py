import logging
from typing import Dict

logger = logging.getLogger(__name__)


class FlowCoordinator:
    """Tracks the steps of each invariant battery run"""

    def __init__(self):
        self.active_flows: Dict[str, Dict] = {}

    def start_flow(self, flow_id: str, subject: str):
        """Start tracking a new battery run"""
        self.active_flows[flow_id] = {
            "status": "started",
            "subject": subject,
            "steps_completed": [],
            "current_step": None
        }
        logger.info(f"Flow {flow_id}: started for {subject}")

    def begin_step(self, flow_id: str, step: str):
        if flow_id in self.active_flows:
            self.active_flows[flow_id]["current_step"] = step
            logger.debug(f"Flow {flow_id}: running {step}")

    def update_flow(self, flow_id: str, status: str, step: str):
        """Record a finished step"""
        if flow_id in self.active_flows:
            flow = self.active_flows[flow_id]
            flow["status"] = status
            flow["steps_completed"].append(step)
            flow["current_step"] = None
            logger.info(f"Flow {flow_id}: Completed {step}")

    def finish_flow(self, flow_id: str, status: str = "finished") -> Dict:
        flow = self.active_flows.pop(flow_id, {})
        if flow:
            flow["status"] = status
            logger.info(f"Flow {flow_id}: {status} after {len(flow['steps_completed'])} steps")
        return flow

    def get_flow_status(self, flow_id: str) -> Dict:
        """Get current flow status"""
        return self.active_flows.get(flow_id, {})
